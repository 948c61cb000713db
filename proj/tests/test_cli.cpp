#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + SEQCORR_BIN + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("field-info") {
    RunResult r = run("field-info --m 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "m:           6\n"
          "n:           3\n"
          "poly:        0x43\n"
          "T:           9\n"
          "alpha_order: 63\n"
          "beta_order:  7\n");

    RunResult j = run("--format json field-info --m 6");
    CHECK(j.exit_code == 0);
    CHECK(j.out == "{\"m\":6,\"n\":3,\"poly\":\"0x43\",\"T\":9,\"alpha_order\":63,\"beta_order\":7}\n");

    RunResult odd = run("field-info --m 7");
    CHECK(odd.exit_code == 2);
    CHECK(odd.out.find("OddDegree") != std::string::npos);

    CHECK(run("field-info --m 6 --poly 0x43").exit_code == 0);
    RunResult notprim = run("field-info --m 6 --poly 0x49"); // x^6+x^3+1 has order-9 root
    CHECK(notprim.exit_code == 2);
    CHECK(notprim.out.find("NotPrimitive") != std::string::npos);
}

TEST_CASE("spectrum") {
    RunResult r = run("spectrum --m 6 --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"m\":6,\"d\":3,\"values\":[{\"c\":-17,\"count\":1},{\"c\":-1,\"count\":3},"
          "{\"c\":7,\"count\":3}]}\n");
    CHECK(run("spectrum --m 6 --d 7").exit_code == 2);    // gcd(7,7) != 1
    CHECK(run("spectrum --m 6").exit_code == 2);          // missing --d
    CHECK(run("--format csv spectrum --m 6 --d 3").exit_code == 2);
}

TEST_CASE("enumerate") {
    RunResult r3 = run("enumerate --n 3");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out ==
          "n,d,coset_leader,l,i,k,r,s\n"
          "3,3,3,2,0,1,3,2\n"
          "3,5,3,2,2,1,3,2\n"
          "3,6,3,2,1,1,3,2\n");

    RunResult r4 = run("enumerate --n 4");
    CHECK(r4.exit_code == 0);
    CHECK(r4.out == "n,d,coset_leader,l,i,k,r,s\n"); // none at a power-of-two n
}

TEST_CASE("rank-census") {
    RunResult r = run("rank-census --m 12 --l 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"m\":12,\"l\":4,\"k\":2,\"ranks\":{\"12\":47,\"8\":16}}\n");
    CHECK(run("rank-census --m 12 --l 2").exit_code == 2); // l = 2 not normalized at n = 6
}

TEST_CASE("verify") {
    RunResult r = run("verify --m 12 --d 26");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(r.out.find("\"rank_census\":{\"12\":47,\"8\":16}") != std::string::npos);

    CHECK(run("verify --m 6 --d 3").exit_code == 0);
    CHECK(run("verify --m 8 --d 7").exit_code == 2); // no (l, i) solves the congruence
}

TEST_CASE("search") {
    RunResult r8 = run("search --m 8 --max-values 4");
    CHECK(r8.exit_code == 0);
    CHECK(r8.out ==
          "m,d,num_values,values,l,i,k\n"
          "8,1,2,-17:7;15:8,,,\n"
          "8,7,4,-33:2;-9:4;7:4;15:5,,,\n");

    RunResult r12 = run("search --m 12 --max-values 4");
    CHECK(r12.exit_code == 0);
    CHECK(r12.out.find("12,13,4,-257:1;-65:21;-1:15;63:26,4,5,2\n") != std::string::npos);

    RunResult r16 = run("search --m 16 --max-values 4");
    CHECK(r16.exit_code == 0);
    CHECK(r16.out ==
          "m,d,num_values,values,l,i,k\n"
          "16,1,2,-257:127;255:128,,,\n");

    CHECK(run("search --m 22 --max-values 4").exit_code == 2); // above the search bound
}

TEST_CASE("output determinism") {
    for (const char* cmd : {"spectrum --m 10 --d 7", "enumerate --n 6", "search --m 10 --max-values 6",
                            "verify --m 10 --d 7"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
    // worker count must not change any output byte
    RunResult one = run("search --m 14 --max-values 4 --threads 1");
    RunResult many = run("search --m 14 --max-values 4 --threads 8");
    CHECK(one.exit_code == 0);
    CHECK(one.out == many.out);
}

TEST_CASE("output redirection and the output-directory variable") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "seqcorr_cli_test";
    fs::create_directories(dir);
    RunResult r = run("spectrum --m 6 --d 3 -o spec.json", "SEQCORR_OUTPUT_DIR=" + dir.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(dir / "spec.json", std::ios::binary);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body == run("spectrum --m 6 --d 3").out);
    fs::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("unknown-command").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("spectrum --m 6 --d 3 --bogus").exit_code == 2);
}
