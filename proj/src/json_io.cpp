#include "softframe/json_io.hpp"

#include <fstream>
#include <sstream>

namespace softframe {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& expect_object(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

double expect_number(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Eigen::Index expect_positive_integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) {
        fail(path, "expected a positive integer");
    }
    return static_cast<Eigen::Index>(j.get<long long>());
}

const Json& expect_member(const Json& j, const char* key, const std::string& path) {
    expect_object(j, path);
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing required key '") + key + "'");
    return *it;
}

}  // namespace

// ---- serialization ----------------------------------------------------------

Json complex_to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

Json to_json(const SoftReal& value) {
    Json out = Json::object();
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[value.params().label(i)] = value.at(i);
    }
    return out;
}

Json to_json(const SoftComplex& value) {
    Json out = Json::object();
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[value.params().label(i)] = complex_to_json(value.at(i));
    }
    return out;
}

Json to_json(const SoftVector& value) {
    Json values = Json::object();
    for (std::size_t i = 0; i < value.params().size(); ++i) {
        Json entries = Json::array();
        for (Eigen::Index k = 0; k < value.dim(); ++k) {
            entries.push_back(complex_to_json(value.at(i)(k)));
        }
        values[value.params().label(i)] = std::move(entries);
    }
    return Json{{"dim", value.dim()}, {"values", std::move(values)}};
}

Json to_json(const SoftOperator& value) {
    Json values = Json::object();
    for (std::size_t i = 0; i < value.params().size(); ++i) {
        Json matrix = Json::array();
        for (Eigen::Index r = 0; r < value.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < value.cols(); ++c) {
                row.push_back(complex_to_json(value.at(i)(r, c)));
            }
            matrix.push_back(std::move(row));
        }
        values[value.params().label(i)] = std::move(matrix);
    }
    return Json{{"rows", value.rows()}, {"cols", value.cols()}, {"values", std::move(values)}};
}

Json to_json(const FrameBoundsCertificate& value) {
    return Json{{"lower", to_json(value.lower)},
                {"upper", to_json(value.upper)},
                {"is_frame", value.is_frame},
                {"is_tight", value.is_tight}};
}

Json to_json(const verify::PropertyReport& value) {
    Json out{{"property_id", value.property_id},
             {"passed", value.passed},
             {"worst_violation", value.worst_violation},
             {"tolerance", value.tolerance}};
    if (value.witness) out["witness"] = *value.witness;
    if (value.skip_reason) out["skip_reason"] = *value.skip_reason;
    return out;
}

// ---- parsing ---------------------------------------------------------------

Complex complex_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    if (j.size() != 2) fail(path, "expected a [re, im] pair");
    return Complex(expect_number(j[0], path + "/0"), expect_number(j[1], path + "/1"));
}

SoftReal soft_real_from_json(const Json& j, const ParameterSet& params, const std::string& path) {
    expect_object(j, path);
    std::vector<double> values(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::string& label = params.label(i);
        auto it = j.find(label);
        if (it == j.end()) fail(path, "missing value for parameter '" + label + "'");
        values[i] = expect_number(*it, path + "/" + label);
    }
    if (j.size() != params.size()) fail(path, "contains labels outside the parameter set");
    return SoftReal(params, std::move(values));
}

SoftVector soft_vector_from_json(const Json& j, const ParameterSet& params,
                                 const std::string& path) {
    const Eigen::Index dim = expect_positive_integer(expect_member(j, "dim", path), path + "/dim");
    const Json& values = expect_member(j, "values", path);
    expect_object(values, path + "/values");
    std::vector<Eigen::VectorXcd> out(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::string& label = params.label(i);
        auto it = values.find(label);
        if (it == values.end()) {
            fail(path + "/values", "missing value for parameter '" + label + "'");
        }
        const std::string value_path = path + "/values/" + label;
        expect_array(*it, value_path);
        if (static_cast<Eigen::Index>(it->size()) != dim) {
            fail(value_path, "expected " + std::to_string(dim) + " entries");
        }
        Eigen::VectorXcd v(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            v(k) = complex_from_json((*it)[k], value_path + "/" + std::to_string(k));
        }
        out[i] = std::move(v);
    }
    return SoftVector(params, dim, std::move(out));
}

SoftOperator soft_operator_from_json(const Json& j, const ParameterSet& params,
                                     const std::string& path,
                                     std::optional<Eigen::Index> expected_cols) {
    const Eigen::Index rows =
        expect_positive_integer(expect_member(j, "rows", path), path + "/rows");
    Eigen::Index cols;
    if (auto it = j.find("cols"); it != j.end()) {
        cols = expect_positive_integer(*it, path + "/cols");
        if (expected_cols && cols != *expected_cols) {
            fail(path + "/cols", "expected " + std::to_string(*expected_cols) + " columns");
        }
    } else if (expected_cols) {
        cols = *expected_cols;
    } else {
        fail(path, "missing required key 'cols'");
    }
    const Json& values = expect_member(j, "values", path);
    expect_object(values, path + "/values");
    std::vector<Eigen::MatrixXcd> out(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::string& label = params.label(i);
        auto it = values.find(label);
        if (it == values.end()) {
            fail(path + "/values", "missing value for parameter '" + label + "'");
        }
        const std::string matrix_path = path + "/values/" + label;
        expect_array(*it, matrix_path);
        if (static_cast<Eigen::Index>(it->size()) != rows) {
            fail(matrix_path, "expected " + std::to_string(rows) + " rows");
        }
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const std::string row_path = matrix_path + "/" + std::to_string(r);
            const Json& row = (*it)[r];
            expect_array(row, row_path);
            if (static_cast<Eigen::Index>(row.size()) != cols) {
                fail(row_path, "expected " + std::to_string(cols) + " entries");
            }
            for (Eigen::Index c = 0; c < cols; ++c) {
                m(r, c) = complex_from_json(row[c], row_path + "/" + std::to_string(c));
            }
        }
        out[i] = std::move(m);
    }
    return SoftOperator(params, rows, cols, std::move(out));
}

// ---- frame spec documents ----------------------------------------------------

FrameSpecDocument frame_spec_from_json(const Json& j) {
    const Json& parameters = expect_member(j, "parameters", "");
    expect_array(parameters, "/parameters");
    if (parameters.empty()) fail("/parameters", "parameter list must be non-empty");
    std::vector<std::string> labels;
    labels.reserve(parameters.size());
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (!parameters[i].is_string()) {
            fail("/parameters/" + std::to_string(i), "expected a string label");
        }
        labels.push_back(parameters[i].get<std::string>());
    }
    ParameterSet params = [&] {
        try {
            return ParameterSet(std::move(labels));
        } catch (const ShapeError& e) {
            fail("/parameters", e.what());
        }
    }();

    const Eigen::Index ambient_dim = expect_positive_integer(
        expect_member(j, "ambient_dim", ""), "/ambient_dim");
    const Json& blocks = expect_member(j, "blocks", "");
    expect_array(blocks, "/blocks");
    if (blocks.empty()) fail("/blocks", "at least one block required");
    std::vector<SoftOperator> ops;
    ops.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        ops.push_back(soft_operator_from_json(blocks[b], params,
                                              "/blocks/" + std::to_string(b), ambient_dim));
    }

    FrameSpecDocument doc{SoftGFrame(params, ambient_dim, std::move(ops)), std::nullopt,
                          std::nullopt};
    if (auto it = j.find("name"); it != j.end() && it->is_string()) {
        doc.name = it->get<std::string>();
    }
    if (auto it = j.find("description"); it != j.end() && it->is_string()) {
        doc.description = it->get<std::string>();
    }
    return doc;
}

Json frame_spec_to_json(const FrameSpecDocument& doc) {
    Json blocks = Json::array();
    for (std::size_t b = 0; b < doc.frame.block_count(); ++b) {
        Json block = to_json(doc.frame.block(b));
        block.erase("cols");  // implied by ambient_dim in the frame format
        blocks.push_back(std::move(block));
    }
    Json out{{"parameters", doc.frame.params().labels()},
             {"ambient_dim", doc.frame.ambient_dim()},
             {"blocks", std::move(blocks)}};
    if (doc.name) out["name"] = *doc.name;
    if (doc.description) out["description"] = *doc.description;
    return out;
}

Json load_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ParseError("cannot open '" + file.string() + "' for reading");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + file.string() + "' is not valid JSON: " + e.what());
    }
}

FrameSpecDocument load_frame_spec(const std::filesystem::path& file) {
    return frame_spec_from_json(load_json(file));
}

void save_json(const Json& j, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) {
        throw ParseError("cannot open '" + file.string() + "' for writing");
    }
    out << j.dump(2) << '\n';
}

// ---- local frame documents ---------------------------------------------------

LocalsDocument locals_from_json(const Json& j, const ParameterSet& params) {
    const Json& families = expect_member(j, "families", "");
    expect_array(families, "/families");
    if (families.empty()) fail("/families", "at least one family required");
    LocalsDocument doc;
    doc.families.reserve(families.size());
    doc.tight.reserve(families.size());
    for (std::size_t f = 0; f < families.size(); ++f) {
        const std::string family_path = "/families/" + std::to_string(f);
        const Json& vectors = expect_member(families[f], "vectors", family_path);
        expect_array(vectors, family_path + "/vectors");
        if (vectors.empty()) fail(family_path + "/vectors", "family must be non-empty");
        std::vector<SoftVector> family;
        family.reserve(vectors.size());
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            family.push_back(soft_vector_from_json(
                vectors[k], params, family_path + "/vectors/" + std::to_string(k)));
        }
        bool tight = false;
        if (auto it = families[f].find("tight"); it != families[f].end()) {
            if (!it->is_boolean()) fail(family_path + "/tight", "expected a boolean");
            tight = it->get<bool>();
        }
        doc.families.push_back(std::move(family));
        doc.tight.push_back(tight);
    }
    return doc;
}

LocalsDocument load_locals(const std::filesystem::path& file, const ParameterSet& params) {
    return locals_from_json(load_json(file), params);
}

}  // namespace softframe
