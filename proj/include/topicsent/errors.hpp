#pragma once

#include <stdexcept>
#include <string>

namespace topicsent {

// Error families map onto the CLI exit codes: ConfigError -> 2,
// DataError -> 3, NumericError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ingest
struct MissingColumn : DataError { using DataError::DataError; };
struct BadSentiment : DataError { using DataError::DataError; };
struct EmptyFile : DataError { using DataError::DataError; };

// corpus
struct EmptyVocabulary : DataError { using DataError::DataError; };

// topics
struct BadHyperparam : ConfigError { using ConfigError::ConfigError; };
struct EmptyCorpus : DataError { using DataError::DataError; };
struct UnknownDoc : DataError { using DataError::DataError; };

// embeddings
struct UnknownWord : DataError { using DataError::DataError; };
struct ZeroVector : NumericError { using NumericError::NumericError; };

// labeler
struct EmptyTopic : DataError { using DataError::DataError; };
struct EmptyUnigrams : DataError { using DataError::DataError; };
struct MissingLabel : DataError { using DataError::DataError; };

// nn / model
struct ShapeMismatch : NumericError { using NumericError::NumericError; };
struct AllMasked : NumericError { using NumericError::NumericError; };
struct BadLabel : NumericError { using NumericError::NumericError; };
struct DimMismatch : ConfigError { using ConfigError::ConfigError; };
struct EmptyTraining : DataError { using DataError::DataError; };
struct EmptyTest : DataError { using DataError::DataError; };

// pipeline / harness
struct MissingAssignment : DataError { using DataError::DataError; };
struct TopicCountMismatch : DataError { using DataError::DataError; };

}  // namespace topicsent
