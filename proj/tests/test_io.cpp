#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qorder/io.hpp"

using namespace qorder;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qorder_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

EnrichedStructure s_m() { return star_idempotent(fixture_q3(), ArrowRef{0, 0, 1}, "a"); }

}  // namespace

TEST_CASE("structure round trip is canonical") {
  EnrichedStructure s = s_m();
  std::string once = io::structure_to_string(s);
  EnrichedStructure back = io::structure_from_string(once, ".");
  CHECK(structures_equal(back, s));
  CHECK(io::structure_to_string(back) == once);
  CHECK(once.find("\"q3\"") != std::string::npos);  // base stored by name
}

TEST_CASE("quantaloid files reload with equal tables") {
  TempDir tmp;
  fs::path file = tmp.path / "base.quant";
  io::save_quantaloid(*fixture_n3(), file);
  io::BaseHandle handle = io::resolve_base(file.string(), ".");
  CHECK(io::quantaloid_to_string(*handle.q) == io::quantaloid_to_string(*fixture_n3()));
  CHECK(validate_quantaloid(*handle.q).ok);
}

TEST_CASE("base references resolve fixtures and completions") {
  io::BaseHandle q3 = io::resolve_base("q3", ".");
  CHECK(q3.q->name() == "q3");
  CHECK_FALSE(q3.idm.has_value());

  io::BaseHandle idm = io::resolve_base("idm:q3", ".");
  REQUIRE(idm.idm.has_value());
  CHECK(idm.q->objects() == 3);
  // Instances are cached: the same reference is the same object.
  CHECK(io::resolve_base("idm:q3", ".").q.get() == idm.q.get());

  io::BaseHandle trop = io::resolve_base("trop:4", ".");
  CHECK(trop.q->objects() == 1);
  CHECK_THROWS_AS(io::resolve_base("mystery", "."), io::parse_error);
}

TEST_CASE("structures over a completed base serialize by reference") {
  io::BaseHandle idm = io::resolve_base("idm:q3", ".");
  Obj m_obj = *idm.q->object_by_name("m");
  EnrichedStructure s = make_structure(
      idm.q, TypedSet{{"a"}, {m_obj}}, {*idm.q->elem_by_name(m_obj, m_obj, "m")});
  std::string text = io::structure_to_string(s);
  CHECK(text.find("\"idm:q3\"") != std::string::npos);
  EnrichedStructure back = io::structure_from_string(text, ".");
  CHECK(structures_equal(back, s));
}

TEST_CASE("matrix files carry their two structures") {
  TempDir tmp;
  EnrichedStructure dom = s_m();
  EnrichedStructure cod = star_identity(fixture_q3(), 0, "c");
  QMatrix mat = make_matrix(*dom.base, cod.obs, dom.obs, {1});
  fs::path file = tmp.path / "phi.mat";
  io::save_matrix(dom, cod, mat, file);
  io::MatrixFile loaded = io::load_matrix(file);
  CHECK(structures_equal(loaded.dom, dom));
  CHECK(structures_equal(loaded.cod, cod));
  CHECK(matrices_equal(loaded.mat, mat));
}

TEST_CASE("matrix files may reference structure files by path") {
  TempDir tmp;
  io::save_structure(s_m(), tmp.path / "a.struct");
  io::save_structure(star_identity(fixture_q3(), 0, "c"), tmp.path / "c.struct");
  std::ofstream out(tmp.path / "phi.mat");
  out << R"({"kind":"matrix","dom":"a.struct","cod":"c.struct","entries":[["m"]]})";
  out.close();
  io::MatrixFile loaded = io::load_matrix(tmp.path / "phi.mat");
  CHECK(loaded.mat.at(0, 0) == 1);
}

TEST_CASE("object map files round trip") {
  TempDir tmp;
  EnrichedStructure sm = s_m();
  ObjectMap ident = identity_map(sm);
  fs::path file = tmp.path / "f.map";
  io::save_map(ident, file);
  io::MapFile loaded = io::load_map(file);
  CHECK(loaded.images == std::vector<int>{0});
  CHECK(structures_equal(loaded.dom, sm));
}

TEST_CASE("malformed inputs raise parse errors with diagnostics") {
  TempDir tmp;
  {
    std::ofstream out(tmp.path / "broken.struct");
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::load_structure(tmp.path / "broken.struct"), io::parse_error);
  CHECK_THROWS_AS(
      io::structure_from_string(
          R"({"kind":"structure","base":"q3","objects":[{"id":"a","type":"*"}],"hom":[["w"]]})",
          "."),
      io::parse_error);
  CHECK_THROWS_AS(
      io::structure_from_string(
          R"({"kind":"structure","base":"q3","objects":[{"id":"a","type":"?"}],"hom":[["m"]]})",
          "."),
      io::parse_error);
  CHECK_THROWS_AS(io::load_structure(tmp.path / "missing.struct"), io::parse_error);
}

TEST_CASE("the empty structure round trips") {
  EnrichedStructure empty = make_structure(fixture_q3(), TypedSet{}, {});
  std::string text = io::structure_to_string(empty);
  EnrichedStructure back = io::structure_from_string(text, ".");
  CHECK(back.obs.size() == 0);
  CHECK(io::structure_to_string(back) == text);
}

TEST_CASE("witness and table files are writable") {
  TempDir tmp;
  EnrichedStructure sm = s_m();
  CompletionResult cc = cauchy_complete_trs(sm);
  io::save_completion_table(sm, cc, tmp.path / "table.json");
  CHECK(fs::exists(tmp.path / "table.json"));

  NormalizeOutcome outcome = normalize_category(star_identity(fixture_q3(), 0, "c"));
  REQUIRE(outcome.result.has_value());
  io::save_splitting_witness(star_identity(fixture_q3(), 0, "c"),
                             outcome.result->choice, tmp.path / "split.witness");
  CHECK(fs::exists(tmp.path / "split.witness"));
}
