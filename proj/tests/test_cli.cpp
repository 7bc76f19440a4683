#include "softframe/json_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SOFTFRAME_CLI_PATH
#error "SOFTFRAME_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using namespace softframe;

struct RunResult {
    int exit_code;
    std::string output;
};

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("softframe-cli-" + std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path out_file = dir / "stdout.txt";
    const std::string command = std::string(SOFTFRAME_CLI_PATH) + " " + args + " > " +
                                out_file.string() + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return RunResult{code, buffer.str()};
}

fs::path write_worked_example(const fs::path& dir) {
    const auto ps = helpers::params_pq();
    const FrameSpecDocument doc{helpers::worked_example(ps), "worked", std::nullopt};
    const fs::path file = dir / "worked.json";
    save_json(frame_spec_to_json(doc), file);
    return file;
}

fs::path write_identity_spec(const fs::path& dir) {
    const auto ps = helpers::params_pq();
    const FrameSpecDocument doc{helpers::identity_frame(ps, 2), std::nullopt, std::nullopt};
    const fs::path file = dir / "identity.json";
    save_json(frame_spec_to_json(doc), file);
    return file;
}

}  // namespace

TEST_CASE("check accepts the identity frame and reports tight bounds") {
    TempDir dir;
    const auto spec = write_identity_spec(dir.path());
    const auto result = run_cli("check " + spec.string() + " --trials 10", dir.path());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("tight:        yes") != std::string::npos);
    CHECK(result.output.find("result:       PASS") != std::string::npos);
}

TEST_CASE("check reports the worked example certificate and exactness") {
    TempDir dir;
    const auto spec = write_worked_example(dir.path());
    const auto result =
        run_cli("check " + spec.string() + " --trials 10 --format json", dir.path());
    CHECK(result.exit_code == 0);
    const Json out = Json::parse(result.output);
    CHECK(out.at("passed") == true);
    CHECK(out.at("certificate").at("lower").at("p") == 1.0);
    CHECK(out.at("certificate").at("upper").at("q") == 2.0);
    CHECK(out.at("certificate").at("is_tight") == false);
    CHECK(out.at("exact") == Json::array({false, false, true}));
    CHECK(out.at("properties").size() == 12);
}

TEST_CASE("check exits 1 on a rank-deficient spec") {
    TempDir dir;
    const auto ps = helpers::params_pq();
    const FrameSpecDocument doc{
        induced_from_vectors({SoftVector::constant(ps, helpers::unit(2, 0))}), std::nullopt,
        std::nullopt};
    const fs::path file = dir.path() / "deficient.json";
    save_json(frame_spec_to_json(doc), file);

    const auto result = run_cli("check " + file.string() + " --trials 5 --format json", dir.path());
    CHECK(result.exit_code == 1);
    const Json out = Json::parse(result.output);
    CHECK(out.at("certificate").at("is_frame") == false);
    CHECK(out.at("certificate").at("lower").at("p") == 0.0);
    CHECK(out.at("certificate").at("lower").at("q") == 0.0);
}

TEST_CASE("check exits 2 on malformed input") {
    TempDir dir;
    const fs::path file = dir.path() / "broken.json";
    std::ofstream(file) << "{ \"parameters\": [\"p\"], ";
    const auto result = run_cli("check " + file.string(), dir.path());
    CHECK(result.exit_code == 2);

    const auto missing = run_cli("check " + (dir.path() / "nope.json").string(), dir.path());
    CHECK(missing.exit_code == 2);
}

TEST_CASE("check output is byte-identical across runs with a fixed seed") {
    TempDir dir;
    const auto spec = write_worked_example(dir.path());
    const std::string args = "check " + spec.string() + " --trials 20 --seed 7 --format json";
    const auto first = run_cli(args, dir.path());
    const auto second = run_cli(args, dir.path());
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
}

TEST_CASE("dual of a Parseval frame returns the frame blocks unchanged") {
    TempDir dir;
    const auto spec = write_identity_spec(dir.path());
    const fs::path out = dir.path() / "dual.json";
    const auto result = run_cli("dual " + spec.string() + " -o " + out.string(), dir.path());
    CHECK(result.exit_code == 0);
    const auto dual_doc = load_frame_spec(out);
    const auto original = load_frame_spec(spec);
    REQUIRE(dual_doc.frame.block_count() == original.frame.block_count());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(dual_doc.frame.block(0).at(i) == original.frame.block(0).at(i));
    }
    const Json raw = load_json(out);
    CHECK(raw.at("certificate").at("is_tight") == true);
}

TEST_CASE("dual exits 1 for a non-frame") {
    TempDir dir;
    const auto ps = helpers::params_pq();
    const FrameSpecDocument doc{
        induced_from_vectors({SoftVector::constant(ps, helpers::unit(2, 0))}), std::nullopt,
        std::nullopt};
    const fs::path file = dir.path() / "deficient.json";
    save_json(frame_spec_to_json(doc), file);
    const auto result = run_cli("dual " + file.string(), dir.path());
    CHECK(result.exit_code == 1);
}

TEST_CASE("reconstruct reports a tiny error on the worked example") {
    TempDir dir;
    const auto spec = write_worked_example(dir.path());
    const auto ps = helpers::params_pq();
    const fs::path vector_file = dir.path() / "f.json";
    save_json(to_json(SoftVector::constant(ps, helpers::vec({1.0, 1.0}))), vector_file);

    const auto result = run_cli(
        "reconstruct " + spec.string() + " " + vector_file.string() + " --format json",
        dir.path());
    CHECK(result.exit_code == 0);
    const Json out = Json::parse(result.output);
    CHECK(out.at("passed") == true);
    CHECK(out.at("max_relative_error").at("p").get<double>() <= 1e-10);
    CHECK(out.at("max_relative_error").at("q").get<double>() <= 1e-10);
}

TEST_CASE("compose of the identity g-frame with an orthonormal basis returns the basis") {
    TempDir dir;
    const auto ps = helpers::params_pq();
    const FrameSpecDocument frame_doc{helpers::identity_frame(ps, 2), std::nullopt, std::nullopt};
    const fs::path spec = dir.path() / "id.json";
    save_json(frame_spec_to_json(frame_doc), spec);

    Json locals = {{"families",
                    Json::array({Json{
                        {"vectors",
                         Json::array({to_json(SoftVector::constant(ps, helpers::unit(2, 0))),
                                      to_json(SoftVector::constant(ps, helpers::unit(2, 1)))})},
                        {"tight", true}}})}};
    const fs::path locals_file = dir.path() / "locals.json";
    save_json(locals, locals_file);

    const fs::path out = dir.path() / "composed.json";
    const auto result = run_cli(
        "compose " + spec.string() + " " + locals_file.string() + " -o " + out.string(),
        dir.path());
    CHECK(result.exit_code == 0);
    const Json composed = load_json(out);
    REQUIRE(composed.at("vectors").size() == 2);
    CHECK(composed.at("order") == Json::array({Json::array({0, 0}), Json::array({0, 1})}));
    CHECK(composed.at("certificate").at("is_tight") == true);
    const auto v0 = soft_vector_from_json(composed.at("vectors")[0], ps, "");
    CHECK(v0.at(0) == helpers::unit(2, 0));
}

TEST_CASE("compose rejects a family falsely declared tight") {
    TempDir dir;
    const auto ps = helpers::params_pq();
    const FrameSpecDocument frame_doc{helpers::identity_frame(ps, 2), std::nullopt, std::nullopt};
    const fs::path spec = dir.path() / "id.json";
    save_json(frame_spec_to_json(frame_doc), spec);

    Json locals = {{"families",
                    Json::array({Json{
                        {"vectors",
                         Json::array({to_json(SoftVector::constant(ps, helpers::unit(2, 0))),
                                      to_json(SoftVector::constant(ps, helpers::unit(2, 0))),
                                      to_json(SoftVector::constant(ps, helpers::unit(2, 1)))})},
                        {"tight", true}}})}};
    const fs::path locals_file = dir.path() / "locals.json";
    save_json(locals, locals_file);
    const auto result =
        run_cli("compose " + spec.string() + " " + locals_file.string(), dir.path());
    CHECK(result.exit_code == 1);
}

TEST_CASE("report emits one line per property") {
    TempDir dir;
    const auto spec = write_worked_example(dir.path());
    const auto result = run_cli("report " + spec.string() + " --trials 5", dir.path());
    CHECK(result.exit_code == 0);
    std::size_t lines = 0;
    for (char c : result.output) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 12);
}

TEST_CASE("frame data survives the dual of the dual") {
    TempDir dir;
    const auto spec = write_worked_example(dir.path());
    const fs::path once = dir.path() / "dual.json";
    const fs::path twice = dir.path() / "dual2.json";
    REQUIRE(run_cli("dual " + spec.string() + " -o " + once.string(), dir.path()).exit_code == 0);
    REQUIRE(run_cli("dual " + once.string() + " -o " + twice.string(), dir.path()).exit_code == 0);
    const auto original = load_frame_spec(spec);
    const auto recovered = load_frame_spec(twice);
    for (std::size_t j = 0; j < original.frame.block_count(); ++j) {
        for (std::size_t i = 0; i < original.frame.params().size(); ++i) {
            CHECK((recovered.frame.block(j).at(i) - original.frame.block(j).at(i))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-12);
        }
    }
}
