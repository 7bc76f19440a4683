#pragma once

#include "softframe/compose.hpp"
#include "softframe/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace softframe {

/// Located parse failure: message carries a path into the offending document.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

using Json = nlohmann::json;

// ---- serialization ----------------------------------------------------------

Json complex_to_json(Complex value);
Json to_json(const SoftReal& value);
Json to_json(const SoftComplex& value);
Json to_json(const SoftVector& value);
Json to_json(const SoftOperator& value);
Json to_json(const FrameBoundsCertificate& value);
Json to_json(const verify::PropertyReport& value);

// ---- parsing ---------------------------------------------------------------

Complex complex_from_json(const Json& j, const std::string& path);
SoftReal soft_real_from_json(const Json& j, const ParameterSet& params, const std::string& path);
SoftVector soft_vector_from_json(const Json& j, const ParameterSet& params,
                                 const std::string& path);
SoftOperator soft_operator_from_json(const Json& j, const ParameterSet& params,
                                     const std::string& path,
                                     std::optional<Eigen::Index> expected_cols = std::nullopt);

// ---- frame spec documents ----------------------------------------------------

/// The on-disk frame description: a g-frame plus optional metadata.
struct FrameSpecDocument {
    SoftGFrame frame;
    std::optional<std::string> name;
    std::optional<std::string> description;
};

FrameSpecDocument frame_spec_from_json(const Json& j);
Json frame_spec_to_json(const FrameSpecDocument& doc);

FrameSpecDocument load_frame_spec(const std::filesystem::path& file);
void save_json(const Json& j, const std::filesystem::path& file);
Json load_json(const std::filesystem::path& file);

// ---- local frame documents ---------------------------------------------------

/// Parsed `{"families": [{"vectors": [...], "tight": bool}, ...]}` document.
struct LocalsDocument {
    std::vector<std::vector<SoftVector>> families;
    std::vector<bool> tight;
};

LocalsDocument locals_from_json(const Json& j, const ParameterSet& params);
LocalsDocument load_locals(const std::filesystem::path& file, const ParameterSet& params);

}  // namespace softframe
