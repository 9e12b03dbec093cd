#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fakequad/catalog.hpp"

using namespace fakequad;

namespace {

AbelianInvariants ab(std::initializer_list<long> t) {
  AbelianInvariants a;
  for (long x : t) a.torsion.push_back(x);
  return a;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kMain =
    "# main family\n"
    "group = A5\n"
    "gv1 = (2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)\n"
    "sig1 = [2,5,5]\n"
    "\n"
    "gv2 = (1,2,3) (3,4,5) (4,3,2) (2,1,5)\n"
    "sig2 = [3,3,3,3]\n";

ParseError parse_failure(const std::string& text) {
  try {
    build_pair(parse_pair_descriptor(text));
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0);
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  return s.replace(s.find(from), from.size(), to);
}

}  // namespace

TEST_CASE("embedded table") {
  const auto& t = load_table();
  REQUIRE(t.size() == 12);
  CHECK(t[0].group_label == "A5");
  CHECK(t[0].parity == ParityAnnotation::odd);
  CHECK(t[0].d_expected == 1);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].index == static_cast<int>(i + 1));
}

TEST_CASE("printed H1 groups normalize to hand-computed invariant factors") {
  const std::vector<AbelianInvariants> expected = {
      ab({3, 3, 15}), ab({10, 10}),      ab({2, 2, 2, 6}),    ab({2, 2, 2, 2, 4}),    ab({2, 2, 4, 8}),
      ab({5, 5, 5}),  ab({2, 2, 2, 2, 8}), ab({2, 2, 4, 8}),  ab({2, 2, 2, 4, 4}),    ab({4, 4, 4, 4}),
      ab({3, 3, 3, 3, 3}), ab({2, 2, 2, 2, 4, 4}),
  };
  const auto& t = load_table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    CAPTURE(t[i].h1_printed);
    CHECK(parse_abelian_descriptor(t[i].h1_printed) == expected[i]);
  }
  CHECK(parse_abelian_descriptor("Z3^2 x Z15") == ab({3, 3, 15}));
  CHECK(parse_abelian_descriptor("Z_6 x Z_4") == ab({2, 12}));
  CHECK(parse_abelian_descriptor("0") == ab({}));
  CHECK(parse_abelian_descriptor("Z x Z2").free_rank == 1);
  CHECK_THROWS_AS(parse_abelian_descriptor("(Z3^2"), ParseError);
}

TEST_CASE("table serialization round trip") {
  const auto& t = load_table();
  const std::string text = serialize_table(t);
  CHECK(parse_table(text) == t);
  CHECK(text.substr(0, text.find('\n')) == "1 | A5 | <60,5> | [2,5,5] | [3,3,3,3] | odd | 1 | (Z3)^2 x Z15");
  auto rows = t;
  std::reverse(rows.begin(), rows.end());
  rows[0].parity = ParityAnnotation::even;
  CHECK(parse_table(serialize_table(rows)) == rows);
  try {
    parse_table(text + "13 | A5 | <60,5> | [2,5] | [3,3,3,3]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 13);
  }
}

TEST_CASE("pair descriptor") {
  const PairDescriptor d = parse_pair_descriptor(kMain);
  CHECK(d.group.value == "A5");
  CHECK(d.group.line == 2);
  CHECK(d.group.column == 9);
  CHECK(d.gv2.line == 6);
  const UnmixedPair p = build_pair(d);
  CHECK(p.gv1.orders() == std::vector<std::size_t>{2, 5, 5});
  CHECK(is_free_unmixed(p).free);
}

TEST_CASE("pair descriptor errors carry positions") {
  auto e = parse_failure(replace(kMain, "(2,1,3,4,5)", "(1,2)(3,4,5)"));
  CHECK(e.line() == 3);
  CHECK(e.column() == 18);
  CHECK(e.message().find("not an element of A5") != std::string::npos);

  e = parse_failure(replace(kMain, "(2,1,3,4,5)", "(2,1,3,5,4)"));
  CHECK(e.line() == 3);
  CHECK(e.message().find("nontrivial product") != std::string::npos);

  e = parse_failure(replace(kMain, "sig1 = [2,5,5]\n", ""));
  CHECK(e.message().find("missing 'sig1") != std::string::npos);

  e = parse_failure(std::string(kMain) + "type = mixed\n");
  CHECK(e.line() == 8);
  CHECK(e.column() == 8);
  CHECK(e.message().find("mixed") != std::string::npos);

  e = parse_failure(std::string(kMain) + "colour = blue\n");
  CHECK(e.line() == 8);
  CHECK(e.column() == 1);

  e = parse_failure(std::string(kMain) + "group = S4\n");
  CHECK(e.line() == 8);
  CHECK(e.message().find("duplicate") != std::string::npos);

  e = parse_failure(replace(kMain, "sig1 = [2,5,5]", "sig1 = [2,5,x]"));
  CHECK(e.line() == 4);
  CHECK(e.column() == 13);

  CHECK_NOTHROW(build_pair(parse_pair_descriptor(std::string(kMain) + "type = unmixed\n")));
}

TEST_CASE("witness cache round trip") {
  const std::string text = slurp(std::string(FAKEQUAD_DATA_DIR) + "/witnesses.txt");
  REQUIRE(!text.empty());
  const WitnessCache cache = parse_witness_cache(text);
  CHECK(cache.size() == 12);
  RowOptions options;
  options.witnesses = &cache;
  std::vector<RowReport> reports;
  for (int k : {1, 6, 11}) {
    reports.push_back(reproduce_row(k, options));
    CHECK(reports.back().witness_source == "cache");
    CHECK(reports.back().passed());
  }
  const WitnessCache again = parse_witness_cache(format_witness_cache(reports));
  REQUIRE(again.size() == 3);
  for (int k : {1, 6, 11}) {
    CHECK(again.at(k).gv1.value == cache.at(k).gv1.value);
    CHECK(again.at(k).gv2.value == cache.at(k).gv2.value);
  }
}

TEST_CASE("rejected cache entries fall back to search") {
  WitnessCache cache = parse_witness_cache(slurp(std::string(FAKEQUAD_DATA_DIR) + "/witnesses.txt"));
  cache.at(6).gv2 = cache.at(6).gv1;
  cache.at(6).sig2 = cache.at(6).sig1;
  RowOptions options;
  options.witnesses = &cache;
  const RowReport r = reproduce_row(6, options);
  CHECK(r.witness_source.find("search (cache entry rejected") == 0);
  CHECK(r.passed());
}

TEST_CASE("presentation overrides and the skip path") {
  RowOptions bad;
  bad.presentation_overrides["G(16)"] = "a,b | a^4, b^4, a*b*a^-1*b^-1";
  const RowReport skipped = reproduce_row(8, bad);
  REQUIRE(skipped.skipped);
  CHECK(skipped.skipped->find("fingerprint") != std::string::npos);
  CHECK(!skipped.passed());

  RowOptions good;
  good.presentation_overrides["G(16)"] = presentation_text("G(16)");
  const RowReport ok = reproduce_row(8, good);
  CHECK(!ok.skipped);
  CHECK(ok.passed());

  RowOptions misplaced;
  misplaced.presentation_overrides["A5"] = "a | a^5";
  CHECK_THROWS_AS(reproduce_row(1, misplaced), std::invalid_argument);
  CHECK_THROWS_AS(reproduce_row(0), std::out_of_range);
  CHECK_THROWS_AS(reproduce_row(13), std::out_of_range);
}

TEST_CASE("parity consistency") {
  CHECK(parity_consistent(ParityAnnotation::odd, Verdict::odd));
  CHECK(!parity_consistent(ParityAnnotation::odd, Verdict::undetermined));
  CHECK(!parity_consistent(ParityAnnotation::odd, Verdict::even));
  CHECK(parity_consistent(ParityAnnotation::even, Verdict::even));
  CHECK(!parity_consistent(ParityAnnotation::even, Verdict::odd));
  CHECK(parity_consistent(ParityAnnotation::unknown, Verdict::undetermined));
  CHECK(!parity_consistent(ParityAnnotation::unknown, Verdict::even));
  CHECK(!parity_consistent(ParityAnnotation::unknown, Verdict::odd));
}

TEST_CASE("main pipeline") {
  const MainTheoremReport rep = verify_main_theorem();
  CHECK(rep.passed);
  CHECK(!rep.failed_stage());
  REQUIRE(rep.verdict);
  CHECK(rep.verdict->verdict == Verdict::odd);
  CHECK(rep.verdict->coefficients == NumClass{1, 2, 10, 3});
  CHECK(rep.verdict->h1.torsion_string() == "(3, 3, 15)");
  CHECK(rep.verdict->h1.torsion_order() == 135);
  std::vector<std::string> names;
  for (const auto& s : rep.stages) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"tuple-1", "tuple-2", "genus", "freeness", "invariants", "canonical-class",
                                          "h1", "obstruction-suite", "verdict"});
}

TEST_CASE("main pipeline negative controls") {
  MainTheoremInputs wrong_first;
  wrong_first.gv1 = "(1,2)(3,4) (2,1,3,4,5) (1,2,3,4,5)";
  const auto r1 = verify_main_theorem(wrong_first);
  CHECK(!r1.passed);
  CHECK(r1.failed_stage() == std::optional<std::string>("tuple-1"));
  CHECK(!r1.verdict);

  MainTheoremInputs same_sides;
  same_sides.gv2 = same_sides.gv1;
  same_sides.sig2 = same_sides.sig1;
  const auto r2 = verify_main_theorem(same_sides);
  CHECK(!r2.passed);
  CHECK(r2.failed_stage() == std::optional<std::string>("freeness"));
}

TEST_CASE("annotation is reported, not computed") {
  const RowReport r = reproduce_row(10);
  CHECK(r.passed());
  CHECK(r.d == 4);
  REQUIRE(r.parity);
  CHECK(r.parity->verdict == Verdict::undetermined);
  CHECK(r.parity->literature_note == std::optional<std::string>("even"));
}
