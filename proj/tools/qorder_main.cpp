#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qorder/io.hpp"
#include "qorder/propcheck.hpp"

namespace {

using namespace qorder;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

std::string flag_line(const StructureFlags& f) {
  std::string out;
  auto add = [&out](const char* name, bool v) {
    out += std::string(name) + "=" + (v ? "yes" : "no") + " ";
  };
  add("semicategory", f.semicategory);
  add("regular", f.regular);
  add("totally_regular", f.totally_regular);
  add("category", f.category);
  add("normal", f.normal);
  return out;
}

int run_validate(const std::string& base_ref) {
  io::BaseHandle base = io::resolve_base(base_ref, std::filesystem::current_path());
  QuantaloidReport rep = validate_quantaloid(*base.q);
  if (rep.ok) {
    std::cout << "ok: " << base_ref << " satisfies the base axioms\n";
    return kExitOk;
  }
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  return kExitPropertyFails;
}

int run_classify(const std::string& file) {
  EnrichedStructure s = io::load_structure(file);
  std::cout << flag_line(s.flags) << "\n";
  if (s.flags.regular) {
    std::cout << "stable objects:";
    for (int a : stable_objects(s)) std::cout << " " << s.obs.names[a];
    std::cout << "\n";
  }
  return kExitOk;
}

int run_compose(const std::string& left_file, const std::string& right_file,
                const std::string& out) {
  io::MatrixFile left = io::load_matrix(left_file);
  io::MatrixFile right = io::load_matrix(right_file);
  QMatrix composite = compose(*left.dom.base, left.mat, right.mat);
  if (!out.empty()) io::save_matrix(right.dom, left.cod, composite, out);
  std::cout << "composed: " << left.cod.obs.size() << "x" << right.dom.obs.size()
            << " matrix\n";
  return kExitOk;
}

int run_residuate(bool lifting_side, const std::string& phi_file,
                  const std::string& theta_file, const std::string& out) {
  io::MatrixFile phi = io::load_matrix(phi_file);
  io::MatrixFile theta = io::load_matrix(theta_file);
  const Quantaloid& q = *phi.dom.base;
  if (lifting_side) {
    QMatrix x = mat_lifting(q, phi.mat, theta.mat);
    if (!out.empty()) io::save_matrix(phi.cod, theta.cod, x, out);
  } else {
    QMatrix x = mat_extension(q, phi.mat, theta.mat);
    if (!out.empty()) io::save_matrix(theta.dom, phi.dom, x, out);
  }
  std::cout << "residual computed\n";
  return kExitOk;
}

int run_adjoint(const std::string& phi_file, const std::string& out) {
  io::MatrixFile mf = io::load_matrix(phi_file);
  SemiDistributor phi = make_semidistributor(mf.dom, mf.cod, mf.mat);
  if (!phi.flags.regular)
    throw input_error("not a regular semidistributor");
  auto pair = is_left_adjoint(phi);
  if (!pair) {
    std::cout << "not a left adjoint\n";
    return kExitPropertyFails;
  }
  if (!out.empty()) io::save_matrix(mf.cod, mf.dom, pair->right.mat, out);
  std::cout << "left adjoint; right adjoint computed\n";
  return kExitOk;
}

int run_converge(const std::string& phi_file, const std::string& out) {
  io::MatrixFile mf = io::load_matrix(phi_file);
  SemiDistributor phi = make_semidistributor(mf.dom, mf.cod, mf.mat);
  auto pair = is_left_adjoint(phi);
  if (!pair) throw input_error("matrix is not a left adjoint");
  auto map = converges(*pair);
  if (!map) {
    std::cout << "does not converge\n";
    return kExitPropertyFails;
  }
  if (!out.empty()) io::save_map(*map, out);
  std::cout << "converges to:";
  for (size_t i = 0; i < map->images.size(); ++i)
    std::cout << " " << map->dom.obs.names[i] << "->"
              << map->cod.obs.names[map->images[i]];
  std::cout << "\n";
  return kExitOk;
}

int run_complete(bool trs, bool cat, bool skeletal, const std::string& file,
                 const std::string& out, const std::string& table_out) {
  if (trs == cat) throw input_error("choose exactly one of --trs / --cat");
  EnrichedStructure b = io::load_structure(file);
  CompletionResult c = trs ? cauchy_complete_trs(b) : cauchy_complete_cat(b);
  if (skeletal) c = skeletalize(c);
  if (!out.empty()) io::save_structure(c.completed, out);
  if (!table_out.empty()) io::save_completion_table(b, c, table_out);
  std::cout << "completion has " << c.completed.obs.size() << " objects\n";
  return kExitOk;
}

int run_idm(const std::string& base_ref, const std::string& out) {
  io::BaseHandle base = io::resolve_base(base_ref, std::filesystem::current_path());
  IdmQuantaloid idm = build_idm(base.q);
  if (!out.empty()) io::save_quantaloid(*idm.completed, out);
  std::cout << "split-idempotent completion has " << idm.completed->objects()
            << " objects\n";
  return kExitOk;
}

io::BaseHandle idm_handle_for(const EnrichedStructure& s, bool completed_side) {
  io::BaseHandle handle = io::rebase(s);
  if (completed_side) {
    if (!handle.idm)
      throw input_error("structure's base is not a split-idempotent completion");
    return handle;
  }
  if (handle.ref.empty())
    throw input_error("structure's base must be a named fixture for this command");
  return io::resolve_base("idm:" + handle.ref, std::filesystem::current_path());
}

int run_reshuffle(const std::string& file, const std::string& out) {
  EnrichedStructure a = io::load_structure(file);
  io::BaseHandle idm = idm_handle_for(a, false);
  ReshuffleWitness w = reshuffle(a, *idm.idm);
  if (!out.empty()) io::save_structure(w.target, out);
  std::cout << "reshuffled onto " << idm.ref << "; " << flag_line(w.target.flags) << "\n";
  return kExitOk;
}

int run_unreshuffle(const std::string& file, const std::string& out) {
  EnrichedStructure c = io::load_structure(file);
  io::BaseHandle idm = idm_handle_for(c, true);
  EnrichedStructure a = unreshuffle(c, *idm.idm);
  if (!out.empty()) io::save_structure(a, out);
  std::cout << "unreshuffled; " << flag_line(a.flags) << "\n";
  return kExitOk;
}

int run_normalize(const std::string& file, const std::string& out,
                  const std::string& witness_out) {
  EnrichedStructure a = io::load_structure(file);
  NormalizeOutcome outcome = normalize_category(a);
  if (!outcome.result) throw input_error(outcome.error);
  const NormalizeResult& r = *outcome.result;
  if (!out.empty()) io::save_structure(r.normalized, out);
  if (!witness_out.empty()) io::save_splitting_witness(a, r.choice, witness_out);
  std::cout << "normalized; inverse pair "
            << (r.inverse_pair_verified ? "verified" : "FAILED") << "\n";
  return r.inverse_pair_verified ? kExitOk : kExitPropertyFails;
}

int run_morita(const std::string& a_file, const std::string& b_file,
               const std::string& witness_out) {
  EnrichedStructure a = io::load_structure(a_file);
  EnrichedStructure b = io::load_structure(b_file);
  IsoSearchResult res = search_isomorphism(a, b);
  switch (res.status) {
    case SearchStatus::found:
      std::cout << "VERDICT: isomorphic\n";
      if (!witness_out.empty()) io::save_iso_witness(*res.witness, witness_out);
      return kExitOk;
    case SearchStatus::none:
      std::cout << "VERDICT: not isomorphic\n";
      return kExitPropertyFails;
    case SearchStatus::budget_exceeded:
      std::cout << "VERDICT: budget exceeded\n";
      return kExitBudgetExceeded;
  }
  return kExitInputError;
}

int run_factor(const std::string& map_file, const std::string& out,
               const std::string& completed_out) {
  io::MapFile mf = io::load_map(map_file);
  ObjectMap f = make_object_map(mf.dom, mf.cod, mf.images);
  CompletionResult acc = cauchy_complete_trs(mf.dom);
  ObjectMap g = factor_through_completion(f, acc, true);
  if (!out.empty()) io::save_map(g, out);
  if (!completed_out.empty()) io::save_structure(acc.completed, completed_out);
  std::cout << "factored through a completion with " << acc.completed.obs.size()
            << " objects\n";
  return kExitOk;
}

int run_prop_check(const std::string& id, std::uint64_t seed) {
  SuiteReport rep = run_suite(id, seed);
  std::cout << rep.name << ": " << (rep.passed ? "holds" : "FAILS") << " ("
            << rep.checked << " checks)\n";
  for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
  for (const auto& f : rep.failures) std::cout << "  witness: " << f << "\n";
  return rep.passed ? kExitOk : kExitPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qorder: enriched order structures over finite base quantaloids"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  std::string base_ref, file_a, file_b, out, table_out, witness_out;
  bool flag_lifting = false, flag_extension = false;
  bool flag_trs = false, flag_cat = false, flag_skeletal = false;
  std::uint64_t seed = 2024;
  std::string suite_id;

  auto* validate = app.add_subcommand("validate", "check the axioms of a base");
  validate->add_option("base", base_ref, "fixture name, idm:<ref>, or .quant file")
      ->required();
  validate->callback([&] { exit_code = run_validate(base_ref); });

  auto* classify_cmd = app.add_subcommand("classify", "classify a structure file");
  classify_cmd->add_option("structure", file_a, ".struct file")->required();
  classify_cmd->callback([&] { exit_code = run_classify(file_a); });

  auto* compose_cmd = app.add_subcommand("compose", "compose two matrix files");
  compose_cmd->add_option("left", file_a)->required();
  compose_cmd->add_option("right", file_b)->required();
  compose_cmd->add_option("-o,--out", out, "output .mat file");
  compose_cmd->callback([&] { exit_code = run_compose(file_a, file_b, out); });

  auto* residuate_cmd = app.add_subcommand("residuate", "matrix residuals");
  residuate_cmd->add_flag("--lifting", flag_lifting, "largest X with X⊗phi <= theta");
  residuate_cmd->add_flag("--extension", flag_extension, "largest X with phi⊗X <= theta");
  residuate_cmd->add_option("phi", file_a)->required();
  residuate_cmd->add_option("theta", file_b)->required();
  residuate_cmd->add_option("-o,--out", out);
  residuate_cmd->callback([&] {
    if (flag_lifting == flag_extension)
      throw qorder::input_error("choose exactly one of --lifting / --extension");
    exit_code = run_residuate(flag_lifting, file_a, file_b, out);
  });

  auto* adjoint_cmd = app.add_subcommand("adjoint", "test a matrix for a right adjoint");
  adjoint_cmd->add_option("phi", file_a)->required();
  adjoint_cmd->add_option("-o,--out", out, "right adjoint output");
  adjoint_cmd->callback([&] { exit_code = run_adjoint(file_a, out); });

  auto* converge_cmd = app.add_subcommand("converge", "convergence of a left adjoint");
  converge_cmd->add_option("phi", file_a)->required();
  converge_cmd->add_option("-o,--out", out, "object map output");
  converge_cmd->callback([&] { exit_code = run_converge(file_a, out); });

  auto* complete_cmd = app.add_subcommand("complete", "Cauchy completion");
  complete_cmd->add_flag("--trs", flag_trs, "idempotent-hom probes");
  complete_cmd->add_flag("--cat", flag_cat, "identity-hom probes");
  complete_cmd->add_flag("--skeletal", flag_skeletal, "one object per profile class");
  complete_cmd->add_option("structure", file_a)->required();
  complete_cmd->add_option("-o,--out", out, "completed structure output");
  complete_cmd->add_option("--table", table_out, "object table output");
  complete_cmd->callback(
      [&] { exit_code = run_complete(flag_trs, flag_cat, flag_skeletal, file_a, out, table_out); });

  auto* idm_cmd = app.add_subcommand("idm", "split-idempotent completion of a base");
  idm_cmd->add_option("base", base_ref)->required();
  idm_cmd->add_option("-o,--out", out, "output .quant file");
  idm_cmd->callback([&] { exit_code = run_idm(base_ref, out); });

  auto* reshuffle_cmd = app.add_subcommand("reshuffle", "retype over idm(base)");
  reshuffle_cmd->add_option("structure", file_a)->required();
  reshuffle_cmd->add_option("-o,--out", out);
  reshuffle_cmd->callback([&] { exit_code = run_reshuffle(file_a, out); });

  auto* unreshuffle_cmd = app.add_subcommand("unreshuffle", "retype back over the source");
  unreshuffle_cmd->add_option("structure", file_a)->required();
  unreshuffle_cmd->add_option("-o,--out", out);
  unreshuffle_cmd->callback([&] { exit_code = run_unreshuffle(file_a, out); });

  auto* normalize_cmd = app.add_subcommand("normalize", "split endo-homs to identities");
  normalize_cmd->add_option("structure", file_a)->required();
  normalize_cmd->add_option("-o,--out", out);
  normalize_cmd->add_option("--witness", witness_out, "splitting witness output");
  normalize_cmd->callback([&] { exit_code = run_normalize(file_a, out, witness_out); });

  auto* morita_cmd = app.add_subcommand("morita", "isomorphism search");
  morita_cmd->add_option("a", file_a)->required();
  morita_cmd->add_option("b", file_b)->required();
  morita_cmd->add_option("--witness", witness_out);
  morita_cmd->callback([&] { exit_code = run_morita(file_a, file_b, witness_out); });

  auto* factor_cmd = app.add_subcommand("factor", "factor a map through the completion");
  factor_cmd->add_option("map", file_a, ".map file with a regular semifunctor")->required();
  factor_cmd->add_option("-o,--out", out, "factored map output");
  factor_cmd->add_option("--completed", table_out, "completed source output");
  factor_cmd->callback([&] { exit_code = run_factor(file_a, out, table_out); });

  auto* prop_cmd = app.add_subcommand("prop-check", "run a named property suite");
  prop_cmd->add_option("suite", suite_id,
                       "one of: lemma4 lemma13 prop15 prop16 prop17 prop18 prop19 prop23")
      ->required();
  prop_cmd->add_option("--seed", seed, "seed for the sampled suites");
  prop_cmd->callback([&] { exit_code = run_prop_check(suite_id, seed); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const qorder::io::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const qorder::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}
