// Python bindings for the softframe core: parameterized vectors and
// operators, g-frames, bounds, duals, reconstruction, composition, and the
// verification harness.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "softframe/json_io.hpp"

namespace py = pybind11;
namespace sf = softframe;

namespace {

py::dict soft_real_to_dict(const sf::SoftReal& value) {
    py::dict out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[py::str(value.params().label(i))] = value.at(i);
    }
    return out;
}

py::dict soft_complex_to_dict(const sf::SoftComplex& value) {
    py::dict out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[py::str(value.params().label(i))] = value.at(i);
    }
    return out;
}

std::size_t label_index(const sf::ParameterSet& params, const std::string& label) {
    const auto index = params.index_of(label);
    if (!index) {
        throw py::key_error("unknown parameter label '" + label + "'");
    }
    return *index;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "soft g-frames over finite parameter sets: bounds, duals, reconstruction";

    py::register_exception<sf::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<sf::MathError>(m, "MathError", PyExc_ArithmeticError);

    py::class_<sf::ParameterSet>(m, "ParameterSet")
        .def(py::init<std::vector<std::string>>(), py::arg("labels"))
        .def_property_readonly("labels", &sf::ParameterSet::labels)
        .def("__len__", &sf::ParameterSet::size)
        .def("__eq__", [](const sf::ParameterSet& a, const sf::ParameterSet& b) { return a == b; })
        .def("__repr__", [](const sf::ParameterSet& p) {
            std::string out = "ParameterSet([";
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i) out += ", ";
                out += "'" + p.label(i) + "'";
            }
            return out + "])";
        });

    py::class_<sf::SoftVector>(m, "SoftVector")
        .def(py::init([](const sf::ParameterSet& params, std::vector<Eigen::VectorXcd> values) {
                 const Eigen::Index dim = values.empty() ? 0 : values.front().size();
                 return sf::SoftVector(params, dim, std::move(values));
             }),
             py::arg("params"), py::arg("values"),
             "values: one complex vector per label, in label order")
        .def_static("zero", &sf::SoftVector::zero, py::arg("params"), py::arg("dim"))
        .def_static("constant", &sf::SoftVector::constant, py::arg("params"), py::arg("value"))
        .def_property_readonly("params", &sf::SoftVector::params)
        .def_property_readonly("dim", &sf::SoftVector::dim)
        .def("at", [](const sf::SoftVector& v, const std::string& label) {
            return v.at(label_index(v.params(), label));
        })
        .def("__add__", [](const sf::SoftVector& a, const sf::SoftVector& b) { return a + b; })
        .def("__sub__", [](const sf::SoftVector& a, const sf::SoftVector& b) { return a - b; })
        .def("__rmul__", [](const sf::SoftVector& v, sf::Complex s) { return s * v; });

    py::class_<sf::DirectSumSoftVector>(m, "DirectSumSoftVector")
        .def_property_readonly("params", &sf::DirectSumSoftVector::params)
        .def_property_readonly("block_dims", &sf::DirectSumSoftVector::block_dims)
        .def("block",
             [](const sf::DirectSumSoftVector& v, const std::string& label, std::size_t j) {
                 return v.block(label_index(v.params(), label), j);
             },
             py::arg("label"), py::arg("j"))
        .def("block_as_vector", &sf::DirectSumSoftVector::block_as_vector, py::arg("j"));

    py::class_<sf::SoftOperator>(m, "SoftOperator")
        .def(py::init([](const sf::ParameterSet& params, std::vector<Eigen::MatrixXcd> values) {
                 const Eigen::Index rows = values.empty() ? 0 : values.front().rows();
                 const Eigen::Index cols = values.empty() ? 0 : values.front().cols();
                 return sf::SoftOperator(params, rows, cols, std::move(values));
             }),
             py::arg("params"), py::arg("values"),
             "values: one complex matrix per label, in label order")
        .def_static("identity", &sf::SoftOperator::identity, py::arg("params"), py::arg("n"))
        .def_static("zero", &sf::SoftOperator::zero, py::arg("params"), py::arg("rows"),
                    py::arg("cols"))
        .def_static("constant", &sf::SoftOperator::constant, py::arg("params"), py::arg("value"))
        .def_property_readonly("params", &sf::SoftOperator::params)
        .def_property_readonly("rows", &sf::SoftOperator::rows)
        .def_property_readonly("cols", &sf::SoftOperator::cols)
        .def("at", [](const sf::SoftOperator& op, const std::string& label) {
            return op.at(label_index(op.params(), label));
        });

    py::class_<sf::SoftGFrame>(m, "SoftGFrame")
        .def(py::init<sf::ParameterSet, Eigen::Index, std::vector<sf::SoftOperator>>(),
             py::arg("params"), py::arg("ambient_dim"), py::arg("blocks"))
        .def_property_readonly("params", &sf::SoftGFrame::params)
        .def_property_readonly("ambient_dim", &sf::SoftGFrame::ambient_dim)
        .def_property_readonly("block_count", &sf::SoftGFrame::block_count)
        .def_property_readonly("block_dims", &sf::SoftGFrame::block_dims)
        .def("block", &sf::SoftGFrame::block, py::arg("j"));

    py::class_<sf::FrameBoundsCertificate>(m, "FrameBoundsCertificate")
        .def_property_readonly("lower",
                               [](const sf::FrameBoundsCertificate& c) {
                                   return soft_real_to_dict(c.lower);
                               })
        .def_property_readonly("upper",
                               [](const sf::FrameBoundsCertificate& c) {
                                   return soft_real_to_dict(c.upper);
                               })
        .def_readonly("is_frame", &sf::FrameBoundsCertificate::is_frame)
        .def_readonly("is_tight", &sf::FrameBoundsCertificate::is_tight);

    py::class_<sf::DualPair>(m, "DualPair")
        .def_readonly("frame", &sf::DualPair::frame)
        .def_readonly("dual", &sf::DualPair::dual)
        .def_readonly("s_inverse", &sf::DualPair::s_inverse);

    py::enum_<sf::ReconstructionOrder>(m, "ReconstructionOrder")
        .value("dual_inside", sf::ReconstructionOrder::dual_inside)
        .value("dual_outside", sf::ReconstructionOrder::dual_outside);

    py::enum_<sf::ResolutionSide>(m, "ResolutionSide")
        .value("dual_first", sf::ResolutionSide::dual_first)
        .value("frame_first", sf::ResolutionSide::frame_first);

    // soft_core operations
    m.def("soft_inner_product",
          [](const sf::SoftVector& x, const sf::SoftVector& y) {
              return soft_complex_to_dict(soft_inner_product(x, y));
          },
          py::arg("x"), py::arg("y"));
    m.def("soft_norm",
          [](const sf::SoftVector& x) { return soft_real_to_dict(soft_norm(x)); }, py::arg("x"));

    // operator algebra
    m.def("apply", &sf::apply, py::arg("op"), py::arg("x"));
    m.def("adjoint", &sf::adjoint, py::arg("op"));
    m.def("compose", &sf::compose, py::arg("a"), py::arg("b"));
    m.def("operator_norm_upper",
          [](const sf::SoftOperator& op) { return soft_real_to_dict(operator_norm_upper(op)); },
          py::arg("op"));
    m.def("invert_hpd", &sf::invert_hpd, py::arg("op"), py::arg("pd_eps") = 1e-12);
    m.def("solve_hpd", &sf::solve_hpd, py::arg("op"), py::arg("rhs"), py::arg("pd_eps") = 1e-12);

    // g-frame operations
    m.def("analysis", &sf::analysis, py::arg("frame"), py::arg("f"));
    m.def("synthesis", &sf::synthesis, py::arg("frame"), py::arg("g"));
    m.def("frame_operator", &sf::frame_operator, py::arg("frame"));
    m.def("frame_bounds", &sf::frame_bounds, py::arg("frame"), py::arg("tol") = 1e-10);
    m.def("is_exact", &sf::is_exact, py::arg("frame"), py::arg("tol") = 1e-10);
    m.def("induced_from_vectors", &sf::induced_from_vectors, py::arg("vectors"));
    m.def("frame_energy",
          [](const sf::SoftGFrame& frame, const sf::SoftVector& f) {
              return soft_real_to_dict(frame_energy(frame, f));
          },
          py::arg("frame"), py::arg("f"));

    // duals
    m.def("canonical_dual", &sf::canonical_dual, py::arg("frame"), py::arg("tol") = 1e-10);
    m.def("reconstruct", &sf::reconstruct, py::arg("pair"), py::arg("f"),
          py::arg("order") = sf::ReconstructionOrder::dual_inside);
    m.def("atomic_resolution", &sf::atomic_resolution, py::arg("pair"), py::arg("op"),
          py::arg("f"), py::arg("side") = sf::ResolutionSide::dual_first);
    m.def("dual_pair_check", &sf::dual_pair_check, py::arg("frame"), py::arg("candidate"),
          py::arg("trials") = 25, py::arg("tol") = 1e-9, py::arg("seed") = 42);

    // composition
    py::class_<sf::LocalFrameFamily>(m, "LocalFrameFamily")
        .def_static("from_vectors", &sf::LocalFrameFamily::from_vectors, py::arg("families"),
                    py::arg("tol") = 1e-10)
        .def_property_readonly("family_count", &sf::LocalFrameFamily::family_count)
        .def("family", &sf::LocalFrameFamily::family, py::arg("j"))
        .def("family_tight", &sf::LocalFrameFamily::family_tight, py::arg("j"))
        .def_property_readonly("envelope_lower",
                               [](const sf::LocalFrameFamily& l) {
                                   return soft_real_to_dict(l.envelope_lower());
                               })
        .def_property_readonly("envelope_upper", [](const sf::LocalFrameFamily& l) {
            return soft_real_to_dict(l.envelope_upper());
        });
    m.def("compose_frame", &sf::compose_frame, py::arg("frame"), py::arg("locals"));
    m.def("composed_dual_pair", &sf::composed_dual_pair, py::arg("frame"), py::arg("partner"),
          py::arg("locals"), py::arg("partner_locals"), py::arg("trials") = 25,
          py::arg("tol") = 1e-8, py::arg("seed") = 42);
    m.def("tight_local_canonical_dual", &sf::tight_local_canonical_dual, py::arg("frame"),
          py::arg("locals"), py::arg("tol") = 1e-10);

    // verification harness
    py::enum_<sf::verify::ModelKind>(m, "ModelKind")
        .value("full_rank", sf::verify::ModelKind::full_rank)
        .value("rank_deficient", sf::verify::ModelKind::rank_deficient);

    py::class_<sf::verify::RandomModel>(m, "RandomModel")
        .def(py::init([](std::uint64_t seed, Eigen::Index ambient_dim,
                         std::vector<Eigen::Index> block_dims, const sf::ParameterSet& params,
                         sf::verify::ModelKind kind) {
                 return sf::verify::RandomModel{seed, ambient_dim, std::move(block_dims), params,
                                                kind};
             }),
             py::arg("seed"), py::arg("ambient_dim"), py::arg("block_dims"), py::arg("params"),
             py::arg("kind") = sf::verify::ModelKind::full_rank)
        .def_readonly("seed", &sf::verify::RandomModel::seed)
        .def_readonly("ambient_dim", &sf::verify::RandomModel::ambient_dim)
        .def_readonly("block_dims", &sf::verify::RandomModel::block_dims);

    py::class_<sf::verify::PropertyReport>(m, "PropertyReport")
        .def_readonly("property_id", &sf::verify::PropertyReport::property_id)
        .def_readonly("passed", &sf::verify::PropertyReport::passed)
        .def_readonly("worst_violation", &sf::verify::PropertyReport::worst_violation)
        .def_readonly("tolerance", &sf::verify::PropertyReport::tolerance)
        .def_readonly("witness", &sf::verify::PropertyReport::witness)
        .def_readonly("skip_reason", &sf::verify::PropertyReport::skip_reason)
        .def("__repr__", [](const sf::verify::PropertyReport& r) {
            return "<PropertyReport " + r.property_id + " " +
                   (r.skip_reason ? "SKIP" : (r.passed ? "PASS" : "FAIL")) + ">";
        });

    m.def("oracle_frame_operator", &sf::verify::oracle_frame_operator, py::arg("frame"));
    m.def("generate_frame", &sf::verify::generate_frame, py::arg("model"));
    m.def("run_suite", &sf::verify::run_suite, py::arg("model"), py::arg("trials") = 200);
    m.def("run_properties",
          [](const sf::SoftGFrame& frame, int trials, std::uint64_t seed, double tol,
             bool expect_frame) {
              sf::verify::SuiteOptions options;
              options.trials = trials;
              options.seed = seed;
              options.tol = tol;
              options.expect_frame = expect_frame;
              return sf::verify::run_properties(frame, options);
          },
          py::arg("frame"), py::arg("trials") = 200, py::arg("seed") = 42,
          py::arg("tol") = 1e-10, py::arg("expect_frame") = true);

    // JSON interchange, same formats as the CLI
    m.def("frame_to_json",
          [](const sf::SoftGFrame& frame) {
              return sf::frame_spec_to_json(
                         sf::FrameSpecDocument{frame, std::nullopt, std::nullopt})
                  .dump(2);
          },
          py::arg("frame"));
    m.def("frame_from_json", [](const std::string& text) {
        return sf::frame_spec_from_json(sf::Json::parse(text)).frame;
    });
    m.def("load_frame", [](const std::string& path) { return sf::load_frame_spec(path).frame; });
    m.def("save_frame", [](const sf::SoftGFrame& frame, const std::string& path) {
        sf::save_json(
            sf::frame_spec_to_json(sf::FrameSpecDocument{frame, std::nullopt, std::nullopt}),
            path);
    });

    m.attr("__version__") = "0.1.0";
}
