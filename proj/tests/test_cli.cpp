#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SOFICLAB_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus(const std::string& name) { return std::string(SOFICLAB_CORPUS_DIR) + "/" + name + ".json"; }

} // namespace

TEST_CASE("period report") {
    const Run r = run("period " + corpus("ex_5_4"));
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["per"] == 2);
    CHECK(j["schema_version"] == 1);
}

TEST_CASE("decide exit codes follow the verdict") {
    const Run no = run("decide s-fact " + corpus("point0") + " " + corpus("golden_even"));
    CHECK(no.code == 1);
    CHECK(nlohmann::json::parse(no.out)["result"]["witness"]["n"] == 1);
    const Run yes = run("decide factorizable " + corpus("point0") + " " + corpus("golden_even"));
    CHECK(yes.code == 0);
}

TEST_CASE("usage errors and runtime errors") {
    CHECK(run("frobnicate").code == 64);
    CHECK(run("period").code == 64);
    CHECK(run("--format xml period " + corpus("even")).code == 64);
    CHECK(run("period /nonexistent.json").code == 3);
    CHECK(run("receptive " + corpus("even") + " 2").code == 3);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string args = "census --nmax 6 " + corpus("golden_even");
    CHECK(run(args).out == run(args).out);
    CHECK(run("components " + corpus("even")).out == run("components " + corpus("even")).out);
}

TEST_CASE("dot output") {
    const Run r = run("--format dot fischer " + corpus("golden_even"));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("receptive and verify subcommands") {
    CHECK(run("receptive " + corpus("even") + " 1").code == 0);
    CHECK(run("receptive " + corpus("even") + " 0").code == 1);
    CHECK(run("verify degree " + corpus("even")).code == 0);
    CHECK(run("verify sync " + corpus("even") + " 0").code == 1);
    CHECK(run("forge receptive-cover " + corpus("even") + " 1").code == 0);
}
