#include <doctest.h>

#include <sstream>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tierperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

using tierperm::cli::kExitDomainError;
using tierperm::cli::kExitOk;
using tierperm::cli::kExitUsageError;

TEST_CASE("tier") {
  CHECK(run({"tier", "356124"}).out == "2\n");
  CHECK(run({"tier", "3", "5", "6", "1", "2", "4"}).out == "2\n");
  CHECK(run({"tier", "--method", "sim", "574836291"}).out == "5\n");
  CHECK(run({"tier", "--method", "both", "4637251"}).out == "4\n");
  const auto bad = run({"tier", "1223"});
  CHECK(bad.code == kExitDomainError);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"tier", "--method", "fast", "12"}).code == kExitUsageError);
}

TEST_CASE("sort") {
  CHECK(run({"sort", "356124"}).out ==
        "pass 1: output 1 2; leftover 3 5 6 4\n"
        "pass 2: output 3 4; leftover 5 6\n"
        "pass 3: output 5 6; leftover \n"
        "tier 2\n");
  const auto traced = run({"sort", "--trace", "231"});
  CHECK(traced.out ==
        "-- pass 1 --\npush 2\npush 3\npush 1\npop 1\n"
        "-- pass 2 --\npush 2\npop 2\npush 3\npop 3\n"
        "tier 1\n");
}

TEST_CASE("pairs") {
  CHECK(run({"pairs", "4637251"}).out ==
        "(2,1) separated by 5 at position 6\n"
        "(3,2) separated by 7 at position 4\n"
        "(4,3) separated by 6 at position 2\n"
        "(6,5) separated by 7 at position 4\n");
  CHECK(run({"pairs", "123"}).out.empty());
}

TEST_CASE("table") {
  const auto r = run({"table", "--max-n", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "n      t = 0  t = 1\n"
        "n = 1      1\n"
        "n = 2      2\n"
        "n = 3      5      1\n"
        "n = 4     14     10\n");
  for (const char* method : {"recurrence", "gf", "parker"}) {
    CHECK(run({"table", "--max-n", "8", "--method", method}).out == run({"table", "--max-n", "8"}).out);
  }
  CHECK(run({"table", "--max-n", "3", "--format", "csv"}).out == "n,t0,t1\n1,1,0\n2,2,0\n3,5,1\n");
  CHECK(run({"table", "--max-n", "4", "--format", "bfile", "--column", "1"}).out ==
        "1 0\n2 0\n3 1\n4 10\n");
  CHECK(run({"table", "--max-n", "12"}).code == kExitDomainError);
  CHECK(run({"table", "--max-n", "101", "--method", "recurrence"}).code == kExitDomainError);
  CHECK(run({"table", "--max-n", "0"}).code == kExitUsageError);
}

TEST_CASE("basis") {
  CHECK(run({"basis", "--tier", "0"}).out == "2 3 1\n");
  const auto b1 = run({"basis", "--tier", "1"});
  CHECK(b1.out.rfind("2 4 1 5 3\n", 0) == 0);
  CHECK(run({"basis", "--tier", "1", "--counts"}).out == "5 8\n6 3\n");
  CHECK(run({"basis", "--tier", "3", "--max-len", "12"}).code == kExitDomainError);
  CHECK(run({"basis"}).code == kExitUsageError);
}

TEST_CASE("maxtier") {
  CHECK(run({"maxtier", "7"}).out == "4\n");
  CHECK(run({"maxtier", "15", "--witness"}).out == "11\n8 12 7 14 6 11 5 15 4 10 3 13 2 9 1\n");
  CHECK(run({"maxtier", "1000000000000"}).out == "999999999960\n");
  CHECK(run({"maxtier", "0"}).code == kExitUsageError);
}

TEST_CASE("bijection") {
  CHECK(run({"bijection", "--to-perm", "12133"}).out == "4 2 1 5 3\n");
  CHECK(run({"bijection", "--to-seq", "53412678"}).out == "12344545\n");
  CHECK(run({"bijection", "--to-perm", "21"}).code == kExitDomainError);
  CHECK(run({"bijection"}).code == kExitUsageError);
  CHECK(run({"bijection", "--to-perm", "1", "--to-seq", "1"}).code == kExitUsageError);
}

TEST_CASE("gf") {
  CHECK(run({"gf", "--tier", "2", "--order", "6"}).out == "8 * z^5\n160 * z^6\n");
  CHECK(run({"gf", "--tier", "0", "--order", "3"}).out == "1 * z^1\n2 * z^2\n5 * z^3\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsageError);
  CHECK(run({"frobnicate"}).code == kExitUsageError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const auto a = run({"table", "--max-n", "9", "--threads", "1"});
  const auto b = run({"--threads", "4", "table", "--max-n", "9"});
  CHECK(a.out == b.out);
  CHECK(run({"basis", "--tier", "1", "--threads", "3"}).out == run({"basis", "--tier", "1"}).out);
}

TEST_CASE("check") {
  const auto r = run({"check", "--max-n", "7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"check", "--max-n", "12"}).code == kExitUsageError);
}
