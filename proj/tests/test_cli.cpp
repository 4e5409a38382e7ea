#include <doctest.h>

#include <fstream>
#include <sstream>

#include "autz/cli.hpp"
#include "autz/congruence.hpp"
#include "autz/involution.hpp"
#include "autz/json_io.hpp"
#include "autz/verify.hpp"

using namespace autz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string doc_of(const IntMatrix& m) { return matrix_document(m).dump(); }

}  // namespace

TEST_CASE("classify report") {
  const Run r = cli({"classify"}, R"({"n": 2, "rows": [[0, 1], [1, 0]]})");
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["is_involution"] == true);
  CHECK(j["profile"] == json::array({0, 0, 1}));
  CHECK(j["kind"] == "one_permutation");
  CHECK(j["residue"] == 1);
  CHECK(j["is_transvection"] == false);

  const json t = cli({"classify"}, R"({"n": 2, "rows": [[1, 2], [0, 1]]})").doc();
  CHECK(t["is_transvection"] == true);
  CHECK(t["m"] == 2);
  CHECK(t["gamma_levels"] == json::array({2}));

  CHECK(cli({"classify"}, R"({"n": 2, "rows": [[2, 0], [0, 2]]})").code == exit_precondition);
  CHECK(cli({"classify"}, R"({"n": 2, "rows": [[1, 0]]})").code == exit_parse);
  CHECK(cli({"classify"}, "not json").code == exit_parse);
  CHECK(cli({"classify"}, R"({"n": 3, "rows": [[1, 0], [0, 1]]})").code == exit_parse);
  CHECK(cli({"classify"}, R"({"n": 2, "rows": [[1, "x"], [0, 1]]})").code == exit_parse);
}

TEST_CASE("big entries travel as decimal strings") {
  const std::string big = "123456789012345678901234567890";
  const json j = cli({"classify"}, R"({"n": 2, "rows": [[1, ")" + big + R"("], [0, 1]]})").doc();
  CHECK(j["is_transvection"] == true);
  CHECK(j["m"] == big);
}

TEST_CASE("canon matches the library") {
  const json j = cli({"canon"}, R"({"n": 2, "rows": [[0, 1], [1, 0]]})").doc();
  CHECK(j["profile"] == json::array({0, 0, 1}));
  CHECK(j["U"] == json::array({json::array({1, 0}), json::array({0, 1})}));
  CHECK(j["block"] == "swap");

  const IntMatrix p = random_unimodular(4, 12, 2, 6) * canonical_block({1, 1, 1}) *
                      inverse_unimodular(random_unimodular(4, 12, 2, 6));
  const json k = cli({"canon"}, doc_of(p)).doc();
  CHECK(matrix_from_rows(k["U"]) == canonical_form(p).basis);
  CHECK(k["block"] == "I_1 + -I_1 + swap");
  CHECK(cli({"canon"}, doc_of(IntMatrix{{1, 1}, {0, 1}})).code == exit_precondition);
}

TEST_CASE("factor output") {
  const json j = cli({"factor"}, R"({"n": 2, "rows": [[0, -1], [1, 0]]})").doc();
  CHECK(j["length"] == 3);
  CHECK(j["round_trip"] == true);
  CHECK(j["factors"].size() == 3);
  CHECK(j["factors"][0].contains("mod2_trivial"));
  CHECK(cli({"factor"}, doc_of(diagonal({-1, 1}))).code == exit_precondition);

  const json g = cli({"factor"}, doc_of(elementary(3, 0, 2, 4))).doc();
  CHECK(g["factors"][0]["i"] == 1);
  CHECK(g["factors"][0]["j"] == 3);
  CHECK(g["factors"][0]["square_root"]["c"] == 2);
  CHECK(g["in_gamma2"] == true);
  CHECK(g["mod2_product_is_identity"] == true);
}

TEST_CASE("lift commands") {
  const json m = cli({"lift", "--mod2"}, R"({"n": 2, "rows": [[0, 1], [1, 0]]})").doc();
  CHECK(matrix_from_rows(m["M"]) == IntMatrix{{2, 3}, {1, 2}});
  CHECK(m["reduces_to_input"] == true);
  const json r = cli({"lift", "--row", "3", "2"}).doc();
  CHECK(matrix_from_rows(r["M"]) == lift_row_to_sl3(3, 2));
  CHECK(cli({"lift", "--row", "2", "2"}).code == exit_precondition);
  CHECK(cli({"lift", "--mod2"}, R"({"n": 2, "rows": [[1, 1], [1, 1]]})").code == exit_precondition);
  CHECK(cli({"lift"}).code == exit_parse);
  CHECK(cli({"lift", "--mod2", "--row", "3", "2"}).code == exit_parse);
}

TEST_CASE("witness commands") {
  const json w = cli({"witness", "--order3"}, R"({"n": 2, "rows": [[0, 1], [1, 0]]})").doc();
  CHECK(w["order"] == 3);
  CHECK(matrix_from_rows(w["witness"]) == order3_witness(IntMatrix{{0, 1}, {1, 0}}));
  const IntMatrix p = canonical_block({5, 0, 2});
  const json f = cli({"witness", "--four"}, doc_of(p)).doc();
  CHECK(f["gamma"] == 4);
  CHECK(matrix_from_rows(f["witness"]) == four_involution_witness(p));
  CHECK(cli({"witness", "--four"}, doc_of(canonical_block({7, 0, 1}))).code == exit_precondition);
  CHECK(cli({"witness", "--order3"}, doc_of(diagonal({1, -1}))).code == exit_precondition);
  CHECK(cli({"witness"}, doc_of(diagonal({1, -1}))).code == exit_parse);
}

TEST_CASE("gamma and identities") {
  const std::string doc = R"({"n": 2, "rows": [[3, 4], [2, 3]]})";
  CHECK(cli({"gamma", "--m", "2"}, doc).doc()["member"] == true);
  CHECK(cli({"gamma", "--m", "4"}, doc).doc()["member"] == false);
  CHECK(cli({"gamma", "--m", "1"}, doc).code == exit_precondition);
  CHECK(cli({"gamma"}, doc).code == exit_parse);

  const Run id = cli({"identities"});
  REQUIRE(id.code == 0);
  const json j = id.doc();
  CHECK(matrix_from_rows(j["commutators"][0]) == IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  CHECK(matrix_from_rows(j["commutators"][2]) == IntMatrix{{1, 2, -3}, {0, 1, -2}, {0, 0, 1}});
  CHECK(j["braid_solutions"].size() == 4);
}

TEST_CASE("verify command") {
  const Run r = cli({"verify", "--suite", "L1_7", "--n", "4", "--trials", "200", "--seed", "42"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["passed"] == true);
  CHECK(j.contains("elapsed_ms"));
  const json lib = to_json(run_suite(SuiteId::L1_7, 4, 200, 42), false);
  json cli_doc = j;
  cli_doc.erase("elapsed_ms");
  CHECK(cli_doc == lib);

  const Run a = cli({"verify", "--suite", "P1_8", "--n", "4", "--trials", "30", "--seed", "5", "--no-timing"});
  const Run b = cli({"verify", "--suite", "P1_8", "--n", "4", "--trials", "30", "--seed", "5", "--no-timing", "--serial"});
  CHECK(a.out == b.out);

  CHECK(cli({"verify", "--suite", "L1_5", "--n", "5", "--trials", "10", "--seed", "1"}).code == exit_precondition);
  CHECK(cli({"verify", "--suite", "NOPE", "--n", "5", "--trials", "10", "--seed", "1"}).code == exit_parse);
  CHECK(cli({"verify", "--suite", "L1_7", "--n", "4", "--trials", "10"}).code == exit_parse);
  CHECK(cli({}).code == exit_parse);
  CHECK(cli({"frobnicate"}).code == exit_parse);
}

TEST_CASE("--file input and stream separation") {
  const std::string path = "cli_test_input.json";
  {
    std::ofstream f(path);
    f << R"({"n": 2, "rows": [[1, 2], [0, 1]]})";
  }
  const Run r = cli({"classify", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.doc()["m"] == 2);
  std::remove(path.c_str());
  const Run missing = cli({"classify", "--file", "does/not/exist.json"});
  CHECK(missing.code == exit_parse);
  CHECK(missing.out.empty());
  CHECK_FALSE(missing.err.empty());
}
