#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "flatbox/boxes.hpp"
#include "flatbox/gallery.hpp"
#include "flatbox/graph.hpp"
#include "flatbox/json_io.hpp"
#include "flatbox/slim.hpp"

#ifndef FLATBOX_CLI_PATH
#error "FLATBOX_CLI_PATH must point at the command-line binary"
#endif

using namespace flatbox;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FLATBOX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

ordered_json parse_doc(const RunResult& r) {
  REQUIRE(!r.out.empty());
  return ordered_json::parse(r.out);
}

std::string temp_file(const std::string& name, const ordered_json& doc) {
  std::string path = "/tmp/flatbox_cli_" + name + ".json";
  write_json(path, doc);
  return path;
}

std::string graph_file(const std::string& name, const Graph& g) {
  return temp_file(name, graph_to_json(g));
}

}  // namespace

TEST_CASE("version and usage errors") {
  RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out == "flatbox 0.1.0\n");

  CHECK(run_cli("").exit_code == 2);                  // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);        // unknown subcommand
  CHECK(run_cli("helly h").exit_code == 2);           // missing required --m
  CHECK(run_cli("forbidden --s 7").exit_code == 2);   // missing required --p
  CHECK(run_cli("helly h --m 2 --format xml").exit_code == 2);
}

TEST_CASE("helly h emits the exact documented value") {
  RunResult r = run_cli("helly h --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\n  \"h\": 7\n}\n");

  ordered_json with_d = parse_doc(run_cli("helly h --m 3 --d 5"));
  CHECK(with_d.at("h") == 9);
  CHECK(with_d.contains("note"));

  RunResult bad = run_cli("helly h --m 0");
  CHECK(bad.exit_code == 2);
  CHECK(parse_doc(bad).contains("error"));
}

TEST_CASE("graph subcommands") {
  std::string c4 = graph_file("c4", make_cycle(4));

  RunResult comp = run_cli("graph complement --in " + c4);
  CHECK(comp.exit_code == 0);
  CHECK(graph_from_json(parse_doc(comp)) == complement(make_cycle(4)));

  ordered_json chrom = parse_doc(run_cli("graph chromatic --in " + c4));
  CHECK(chrom.at("chi") == 2);
  CHECK(chrom.at("coloring").size() == 4);

  ordered_json ind = parse_doc(run_cli("graph induced --in " + c4 + " --vertices 1,2,3"));
  CHECK(ind.at("n") == 3);
  CHECK(ind.at("labels") == ordered_json::parse("[1,2,3]"));
  CHECK(graph_from_json(ind) == make_path({1, 2, 3}));

  CHECK(run_cli("graph induced --in " + c4 + " --vertices 1,,2").exit_code == 2);

  RunResult missing = run_cli("graph complement");
  CHECK(missing.exit_code == 2);
  std::string err = parse_doc(missing).at("error");
  CHECK(err.find("missing required") != std::string::npos);
}

TEST_CASE("interval recognition drives the exit code") {
  std::string p4 = graph_file("p4", make_path({1, 2, 3, 4}));
  std::string c4 = graph_file("c4", make_cycle(4));

  RunResult yes = run_cli("interval check --in " + p4);
  CHECK(yes.exit_code == 0);
  CHECK(parse_doc(yes).at("is_interval") == true);

  RunResult no = run_cli("interval check --in " + c4);
  CHECK(no.exit_code == 1);
  ordered_json no_doc = parse_doc(no);
  CHECK(no_doc.at("is_interval") == false);
  CHECK(no_doc.contains("induced_c4"));

  RunResult realize = run_cli("interval realize --in " + p4);
  CHECK(realize.exit_code == 0);
  IntervalRealization r = interval_realization_from_json(parse_doc(realize));
  CHECK(r.intersection_graph() == make_path({1, 2, 3, 4}));

  CHECK(run_cli("interval realize --in " + c4).exit_code == 1);
}

TEST_CASE("boxes subcommands pierce the gallery family") {
  std::string fam = temp_file("c5cfam", box_family_to_json(gallery_c5c_family()));

  RunResult ig = run_cli("boxes graph --in " + fam);
  CHECK(ig.exit_code == 0);
  CHECK(graph_from_json(parse_doc(ig)) == complement(make_cycle(5)));

  RunResult two = run_cli("boxes pierce --in " + fam + " --n 2");
  CHECK(two.exit_code == 1);
  CHECK(parse_doc(two).at("pierceable") == false);

  RunResult three = run_cli("boxes pierce --in " + fam + " --n 3");
  CHECK(three.exit_code == 0);
  ordered_json three_doc = parse_doc(three);
  CHECK(three_doc.at("pierceable") == true);
  CHECK(three_doc.at("points").size() <= 3);

  ordered_json number = parse_doc(run_cli("boxes piercing-number --in " + fam));
  CHECK(number.at("piercing") == 3);
}

TEST_CASE("slim subcommands check, realize, and read back decompositions") {
  auto [g, dec] = gallery_c5c_decomposition();
  std::string g5 = graph_file("g5", g);
  std::string decfile = temp_file("c5cdec", slim_decomposition_to_json(dec));

  RunResult ok = run_cli("slim check --in " + decfile + " --graph " + g5);
  CHECK(ok.exit_code == 0);
  CHECK(parse_doc(ok).at("ok") == true);

  SlimDecomposition broken = dec;
  broken.jv[0] = {1};
  std::string brokenfile = temp_file("c5cbroken", slim_decomposition_to_json(broken));
  RunResult bad = run_cli("slim check --in " + brokenfile + " --graph " + g5);
  CHECK(bad.exit_code == 1);
  ordered_json bad_doc = parse_doc(bad);
  CHECK(bad_doc.at("ok") == false);
  CHECK(bad_doc.at("violation").at("rule") == "not-simplicial");

  RunResult boxes = run_cli("slim to-boxes --in " + decfile + " --graph " + g5);
  CHECK(boxes.exit_code == 0);
  BoxFamily realized = box_family_from_json(parse_doc(boxes));
  CHECK(intersection_graph(realized) == g);

  std::string famfile = temp_file("c5crealized", box_family_to_json(realized));
  RunResult from = run_cli("slim from-boxes --in " + famfile + " --p 1");
  CHECK(from.exit_code == 0);
  SlimDecomposition derived = slim_decomposition_from_json(parse_doc(from));
  CHECK(check_slim(g, derived).ok);
}

TEST_CASE("boxicity and pboxicity report values and statuses") {
  std::string c4 = graph_file("c4", make_cycle(4));
  ordered_json box = parse_doc(run_cli("boxicity --in " + c4));
  CHECK(box.at("status") == "found");
  CHECK(box.at("boxicity") == 2);
  CHECK(box.at("factors").size() == 2);

  std::string c5c = graph_file("c5c", complement(make_cycle(5)));
  RunResult pb = run_cli("pboxicity --in " + c5c + " --p 1");
  CHECK(pb.exit_code == 0);
  ordered_json pb_doc = parse_doc(pb);
  CHECK(pb_doc.at("status") == "finite");
  CHECK(pb_doc.at("p_boxicity") == 2);
  CHECK(pb_doc.at("k_min") == 2);

  std::string c9c = graph_file("c9c", complement(make_cycle(9)));
  RunResult infeasible = run_cli("pboxicity --in " + c9c + " --p 2 --d-max 6");
  CHECK(infeasible.exit_code == 1);
  CHECK(parse_doc(infeasible).at("status") == "infeasible-for-all-d");

  CHECK(run_cli("pboxicity --in " + c5c + " --p 0").exit_code == 2);
}

TEST_CASE("forbidden emits certificates with frozen digests") {
  RunResult seven = run_cli("forbidden --s 7 --p 1");
  CHECK(seven.exit_code == 0);
  ordered_json cert = parse_doc(seven);
  CHECK(cert.at("tool") == "flatbox");
  CHECK(cert.at("verdict") == "forbidden");
  CHECK(cert.at("scope") == "all");
  ordered_json digest = cert.at("digest");
  CHECK(digest.at("candidates_enumerated") == 128);
  CHECK(digest.at("path_rule_cuts") == 106);
  CHECK(digest.at("candidates_admitted") == 21);
  CHECK(digest.at("candidates_kept") == 21);
  CHECK(digest.at("order") == "cands-v1");
  CHECK(digest.at("search_nodes") == 210);
  CHECK(!cert.at("notes").empty());

  RunResult reversed = run_cli("forbidden --s 7 --p 1 --order reversed");
  CHECK(reversed.exit_code == 0);
  ordered_json rdigest = parse_doc(reversed).at("digest");
  CHECK(rdigest.at("order") == "cands-v1-reversed");
  CHECK(rdigest.at("search_nodes") == digest.at("search_nodes"));
  CHECK(rdigest.at("candidates_kept") == digest.at("candidates_kept"));

  RunResult scoped = run_cli("forbidden --s 9 --p 1 --scope 2");
  CHECK(scoped.exit_code == 0);
  ordered_json scoped_doc = parse_doc(scoped);
  CHECK(scoped_doc.at("scope") == 2);
  CHECK(scoped_doc.at("verdict") == "forbidden");

  RunResult realizable = run_cli("forbidden --s 10 --p 3");
  CHECK(realizable.exit_code == 1);
  ordered_json real_doc = parse_doc(realizable);
  CHECK(real_doc.at("verdict") == "realizable");
  CHECK(real_doc.contains("counterexample"));

  CHECK(run_cli("forbidden --s 7 --p 1 --budget-nodes 40").exit_code == 3);
  CHECK(run_cli("forbidden --s 3 --p 1").exit_code == 2);
  CHECK(run_cli("forbidden --s 7 --p 1 --scope zero").exit_code == 2);
}

TEST_CASE("output is deterministic across reruns and thread counts") {
  RunResult a = run_cli("forbidden --s 8 --p 1");
  RunResult b = run_cli("forbidden --s 8 --p 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult one = run_cli("forbidden --s 8 --p 1 --threads 1");
  RunResult four = run_cli("forbidden --s 8 --p 1 --threads 4");
  CHECK(one.out == four.out);
  CHECK(one.out == a.out);
}

TEST_CASE("--out writes the same document that lands on stdout") {
  const std::string out = "/tmp/flatbox_cli_outcopy.json";
  std::remove(out.c_str());
  RunResult r = run_cli("helly h --m 4 --out " + out);
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  std::string file_text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file_text == r.out);
  std::remove(out.c_str());
}

TEST_CASE("helly subcommands check, witness, and confirm the bound") {
  std::string fam = temp_file("c5cfam", box_family_to_json(gallery_c5c_family()));

  RunResult check4 = run_cli("helly check --in " + fam + " --h 4 --record-failures");
  CHECK(check4.exit_code == 1);
  ordered_json rep = parse_doc(check4);
  CHECK(rep.at("h") == 4);
  CHECK(rep.at("subfamilies_checked") == 5);
  CHECK(rep.at("premise") == true);
  CHECK(rep.at("family_2pierceable") == false);
  CHECK(rep.at("implication_holds") == false);

  RunResult lower = run_cli("helly lower --m 2");
  CHECK(lower.exit_code == 0);
  BoxFamily witness = box_family_from_json(parse_doc(lower));
  CHECK(witness.boxes.size() == 7);

  RunResult upper = run_cli("helly upper --m 1 --s 7,9");
  CHECK(upper.exit_code == 0);
  ordered_json up = parse_doc(upper);
  CHECK(up.at("all_confirmed") == true);
  CHECK(up.at("items").size() == 2);

  CHECK(run_cli("helly upper --m 1 --s 7 --budget-nodes 30").exit_code == 3);
}

TEST_CASE("gallery list and emit") {
  ordered_json list = parse_doc(run_cli("gallery list"));
  CHECK(list.at("constructions").size() == 4);
  CHECK(list.at("constructions")[0] == "c5c-decomposition");

  RunResult emit = run_cli("gallery emit c5c-decomposition");
  CHECK(emit.exit_code == 0);
  ordered_json c = parse_doc(emit);
  CHECK(c.at("name") == "c5c-decomposition");
  CHECK(graph_from_json(c.at("graph")) == complement(make_cycle(5)));

  ordered_json five = parse_doc(run_cli("gallery emit disjoint-intervals --k 5"));
  CHECK(five.at("family").at("boxes").size() == 5);

  CHECK(run_cli("gallery emit nope").exit_code == 2);
}

TEST_CASE("partition-analyze reads the fixture off disk") {
  Graph g = complement(make_cycle(11));
  SlimDecomposition dec;
  dec.p = 3;
  dec.d = 5;
  dec.factors = {complete_graph(11), complete_graph(11),
                 complete_minus(11, {{7, 8}, {8, 9}, {9, 10}}),
                 complete_minus(11, {{6, 7}, {7, 8}}),
                 complete_minus(11, {{3, 4}, {4, 5}, {5, 6}})};
  dec.jv.assign(11, {1, 2});
  std::string gfile = graph_file("c11c", g);
  std::string dfile = temp_file("c11dec", slim_decomposition_to_json(dec));

  RunResult r = run_cli("partition-analyze --in " + dfile + " --graph " + gfile + " --anchor 1");
  CHECK(r.exit_code == 0);
  ordered_json rep = parse_doc(r);
  CHECK(rep.at("s") == 11);
  CHECK(rep.at("anchor") == 1);
  CHECK(rep.at("anchor_axes") == ordered_json::parse("[1,2]"));
  CHECK(rep.at("solutions").size() == 2);
  CHECK(rep.at("partitions").size() == 2);
  CHECK(rep.at("decomposition_fully_valid") == false);

  CHECK(run_cli("partition-analyze --in " + dfile + " --graph " + gfile + " --anchor 0").exit_code ==
        2);
}

TEST_CASE("malformed input files are rejected with located errors") {
  const std::string bad = "/tmp/flatbox_cli_bad.json";
  {
    std::ofstream out(bad);
    out << "{,\n";
  }
  RunResult parse_fail = run_cli("interval check --in " + bad);
  CHECK(parse_fail.exit_code == 2);
  std::string msg = parse_doc(parse_fail).at("error");
  CHECK(msg.find("line 1") != std::string::npos);
  std::remove(bad.c_str());

  std::string wrong = temp_file("wrongshape", ordered_json{{"edges", ordered_json::array()}});
  RunResult shape_fail = run_cli("interval check --in " + wrong);
  CHECK(shape_fail.exit_code == 2);
  CHECK(parse_doc(shape_fail).at("error") == "graph: missing key \"n\"");

  CHECK(run_cli("interval check --in /tmp/flatbox_cli_missing_file.json").exit_code == 2);
}
