#include "qorder/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace qorder::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_text(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(what + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw parse_error("cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw parse_error("cannot write " + file.string());
  out << text;
}

ordered_json quantaloid_to_json(const Quantaloid& q) {
  ordered_json j;
  j["kind"] = "quantaloid";
  if (!q.name().empty()) j["name"] = q.name();
  ordered_json objects = ordered_json::array();
  for (Obj a = 0; a < q.objects(); ++a) objects.push_back(q.object_name(a));
  j["objects"] = objects;
  ordered_json homs = ordered_json::array();
  for (Obj a = 0; a < q.objects(); ++a)
    for (Obj b = 0; b < q.objects(); ++b) {
      ordered_json h;
      h["src"] = q.object_name(a);
      h["dst"] = q.object_name(b);
      h["elements"] = q.elem_names(a, b);
      ordered_json leq = ordered_json::array();
      for (Elem x = 0; x < q.hom(a, b).size(); ++x) {
        ordered_json row = ordered_json::array();
        for (Elem y = 0; y < q.hom(a, b).size(); ++y)
          row.push_back(q.hom(a, b).raw_leq(x, y) ? 1 : 0);
        leq.push_back(row);
      }
      h["leq"] = leq;
      homs.push_back(h);
    }
  j["homs"] = homs;
  ordered_json comps = ordered_json::array();
  for (Obj a = 0; a < q.objects(); ++a)
    for (Obj b = 0; b < q.objects(); ++b)
      for (Obj c = 0; c < q.objects(); ++c) {
        ordered_json entry;
        entry["a"] = q.object_name(a);
        entry["b"] = q.object_name(b);
        entry["c"] = q.object_name(c);
        ordered_json table = ordered_json::array();
        for (Elem g = 0; g < q.hom(b, c).size(); ++g) {
          ordered_json row = ordered_json::array();
          for (Elem f = 0; f < q.hom(a, b).size(); ++f)
            row.push_back(q.elem_names(a, c)[q.compose(a, b, c, g, f)]);
          table.push_back(row);
        }
        entry["table"] = table;
        comps.push_back(entry);
      }
  j["comp"] = comps;
  ordered_json ids;
  for (Obj a = 0; a < q.objects(); ++a)
    ids[q.object_name(a)] = q.elem_names(a, a)[q.id(a)];
  j["id"] = ids;
  return j;
}

QuantaloidPtr quantaloid_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("homs") ||
      !j.contains("comp") || !j.contains("id"))
    throw parse_error("quantaloid: missing objects/homs/comp/id");
  std::string name = j.value("name", std::string());
  std::vector<std::string> object_names = j.at("objects").get<std::vector<std::string>>();
  const int n = static_cast<int>(object_names.size());
  auto index_of = [&object_names](const std::string& o) {
    for (size_t i = 0; i < object_names.size(); ++i)
      if (object_names[i] == o) return static_cast<int>(i);
    throw parse_error("quantaloid: unknown object " + o);
  };

  std::vector<FiniteLattice> homs(static_cast<size_t>(n) * n);
  std::vector<std::vector<std::string>> elem_names(static_cast<size_t>(n) * n);
  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  for (const auto& h : j.at("homs")) {
    int a = index_of(h.at("src").get<std::string>());
    int b = index_of(h.at("dst").get<std::string>());
    auto names = h.at("elements").get<std::vector<std::string>>();
    const int k = static_cast<int>(names.size());
    std::vector<std::uint8_t> leq(static_cast<size_t>(k) * k, 0);
    const auto& rows = h.at("leq");
    if (static_cast<int>(rows.size()) != k) throw parse_error("quantaloid: leq shape");
    for (int x = 0; x < k; ++x) {
      if (static_cast<int>(rows[x].size()) != k) throw parse_error("quantaloid: leq shape");
      for (int y = 0; y < k; ++y)
        leq[static_cast<size_t>(x) * k + y] = rows[x][y].get<int>() ? 1 : 0;
    }
    homs[static_cast<size_t>(a) * n + b] = FiniteLattice(k, std::move(leq));
    elem_names[static_cast<size_t>(a) * n + b] = std::move(names);
    seen[static_cast<size_t>(a) * n + b] = true;
  }
  for (bool s : seen)
    if (!s) throw parse_error("quantaloid: a hom is missing");

  auto elem_index = [&](int a, int b, const std::string& e) {
    const auto& names = elem_names[static_cast<size_t>(a) * n + b];
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == e) return static_cast<Elem>(i);
    throw parse_error("quantaloid: unknown element " + e);
  };

  std::vector<std::vector<Elem>> comp(static_cast<size_t>(n) * n * n);
  std::vector<bool> comp_seen(comp.size(), false);
  for (const auto& entry : j.at("comp")) {
    int a = index_of(entry.at("a").get<std::string>());
    int b = index_of(entry.at("b").get<std::string>());
    int c = index_of(entry.at("c").get<std::string>());
    const auto& table = entry.at("table");
    const size_t nbc = elem_names[static_cast<size_t>(b) * n + c].size();
    const size_t nab = elem_names[static_cast<size_t>(a) * n + b].size();
    if (table.size() != nbc) throw parse_error("quantaloid: comp table shape");
    std::vector<Elem> flat(nbc * nab);
    for (size_t g = 0; g < nbc; ++g) {
      if (table[g].size() != nab) throw parse_error("quantaloid: comp table shape");
      for (size_t f = 0; f < nab; ++f)
        flat[g * nab + f] = elem_index(a, c, table[g][f].get<std::string>());
    }
    size_t idx = (static_cast<size_t>(a) * n + b) * n + c;
    comp[idx] = std::move(flat);
    comp_seen[idx] = true;
  }
  for (bool s : comp_seen)
    if (!s) throw parse_error("quantaloid: a composition table is missing");

  std::vector<Elem> ids(n);
  for (int a = 0; a < n; ++a)
    ids[a] = elem_index(a, a, j.at("id").at(object_names[a]).get<std::string>());

  try {
    return std::make_shared<Quantaloid>(std::move(name), std::move(object_names),
                                        std::move(homs), std::move(elem_names),
                                        std::move(comp), std::move(ids));
  } catch (const input_error& e) {
    throw parse_error(std::string("quantaloid: ") + e.what());
  }
}

std::map<std::string, BaseHandle>& base_cache() {
  static std::map<std::string, BaseHandle> cache;
  return cache;
}

BaseHandle resolve_base_json(const ordered_json& j, const std::filesystem::path& dir) {
  if (j.is_string()) return resolve_base(j.get<std::string>(), dir);
  QuantaloidPtr q = quantaloid_from_json(j);
  std::string key = "inline:" + canonical(quantaloid_to_json(*q));
  auto& cache = base_cache();
  auto it = cache.find(key);
  if (it == cache.end()) {
    BaseHandle handle{q, std::nullopt, std::string()};
    it = cache.emplace(key, std::move(handle)).first;
  }
  return it->second;
}

ordered_json base_to_json(const EnrichedStructure& s) {
  const std::string& name = s.base->name();
  if (!name.empty()) {
    // Only references that resolve again are stored by name.
    try {
      BaseHandle h = resolve_base(name, ".");
      if (h.q) return ordered_json(name);
    } catch (...) {
    }
  }
  return quantaloid_to_json(*s.base);
}

ordered_json structure_to_json(const EnrichedStructure& s) {
  ordered_json j;
  j["kind"] = "structure";
  j["base"] = base_to_json(s);
  ordered_json objects = ordered_json::array();
  for (int i = 0; i < s.obs.size(); ++i) {
    ordered_json o;
    o["id"] = s.obs.names[i];
    o["type"] = s.base->object_name(s.obs.types[i]);
    objects.push_back(o);
  }
  j["objects"] = objects;
  ordered_json hom = ordered_json::array();
  for (int r = 0; r < s.obs.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < s.obs.size(); ++c)
      row.push_back(s.base->elem_names(s.obs.types[c], s.obs.types[r])[s.hom.at(r, c)]);
    hom.push_back(row);
  }
  j["hom"] = hom;
  return j;
}

EnrichedStructure structure_from_json(const ordered_json& j,
                                      const std::filesystem::path& dir) {
  if (!j.is_object() || !j.contains("base") || !j.contains("objects") ||
      !j.contains("hom"))
    throw parse_error("structure: missing base/objects/hom");
  BaseHandle base = resolve_base_json(j.at("base"), dir);
  const Quantaloid& q = *base.q;
  TypedSet obs;
  for (const auto& o : j.at("objects")) {
    std::string id = o.at("id").get<std::string>();
    std::string type = o.at("type").get<std::string>();
    auto t = q.object_by_name(type);
    if (!t) throw parse_error("structure: unknown type " + type);
    for (const auto& prev : obs.names)
      if (prev == id) throw parse_error("structure: duplicate object id " + id);
    obs.names.push_back(std::move(id));
    obs.types.push_back(*t);
  }
  const int n = obs.size();
  const auto& hom = j.at("hom");
  if (static_cast<int>(hom.size()) != n) throw parse_error("structure: hom shape");
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(hom[r].size()) != n) throw parse_error("structure: hom shape");
    for (int c = 0; c < n; ++c) {
      std::string e = hom[r][c].get<std::string>();
      auto elem = q.elem_by_name(obs.types[c], obs.types[r], e);
      if (!elem)
        throw parse_error("structure: element " + e + " is not in hom(" +
                          q.object_name(obs.types[c]) + "," +
                          q.object_name(obs.types[r]) + ")");
      entries[static_cast<size_t>(r) * n + c] = *elem;
    }
  }
  try {
    return make_structure(base.q, std::move(obs), std::move(entries));
  } catch (const input_error& e) {
    throw parse_error(std::string("structure: ") + e.what());
  }
}

EnrichedStructure structure_from_ref(const ordered_json& j,
                                     const std::filesystem::path& dir) {
  if (j.is_string()) return load_structure(dir / j.get<std::string>());
  return structure_from_json(j, dir);
}

}  // namespace

BaseHandle resolve_base(const std::string& ref, const std::filesystem::path& dir) {
  auto& cache = base_cache();
  auto it = cache.find(ref);
  if (it != cache.end()) return it->second;
  if (QuantaloidPtr q = fixture_by_name(ref)) {
    BaseHandle handle{q, std::nullopt, ref};
    return cache.emplace(ref, std::move(handle)).first->second;
  }
  if (ref.rfind("idm:", 0) == 0) {
    BaseHandle inner = resolve_base(ref.substr(4), dir);
    IdmQuantaloid idm = build_idm(inner.q);
    BaseHandle handle{idm.completed, std::move(idm), ref};
    return cache.emplace(ref, std::move(handle)).first->second;
  }
  std::filesystem::path path = dir / ref;
  if (!std::filesystem::exists(path))
    throw parse_error("unknown base reference: " + ref);
  ordered_json j = parse_text(read_file(path), path.string());
  BaseHandle loaded = resolve_base_json(j, path.parent_path());
  return loaded;
}

BaseHandle rebase(const EnrichedStructure& s) {
  const std::string& name = s.base->name();
  if (!name.empty()) {
    try {
      BaseHandle h = resolve_base(name, ".");
      if (h.q) return h;
    } catch (...) {
    }
  }
  return BaseHandle{s.base, std::nullopt, std::string()};
}

std::string quantaloid_to_string(const Quantaloid& q) {
  return canonical(quantaloid_to_json(q));
}

void save_quantaloid(const Quantaloid& q, const std::filesystem::path& file) {
  write_file(file, quantaloid_to_string(q));
}

EnrichedStructure load_structure(const std::filesystem::path& file) {
  ordered_json j = parse_text(read_file(file), file.string());
  return structure_from_json(j, file.parent_path());
}

std::string structure_to_string(const EnrichedStructure& s) {
  return canonical(structure_to_json(s));
}

EnrichedStructure structure_from_string(const std::string& text,
                                        const std::filesystem::path& dir) {
  return structure_from_json(parse_text(text, "structure"), dir);
}

void save_structure(const EnrichedStructure& s, const std::filesystem::path& file) {
  write_file(file, structure_to_string(s));
}

MatrixFile load_matrix(const std::filesystem::path& file) {
  ordered_json j = parse_text(read_file(file), file.string());
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("entries"))
    throw parse_error("matrix: missing dom/cod/entries");
  MatrixFile out{structure_from_ref(j.at("dom"), file.parent_path()),
                 structure_from_ref(j.at("cod"), file.parent_path()), {}};
  const Quantaloid& q = *out.dom.base;
  const auto& entries = j.at("entries");
  const int rows = out.cod.obs.size(), cols = out.dom.obs.size();
  if (static_cast<int>(entries.size()) != rows) throw parse_error("matrix: entries shape");
  std::vector<Elem> flat(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(entries[r].size()) != cols)
      throw parse_error("matrix: entries shape");
    for (int c = 0; c < cols; ++c) {
      std::string e = entries[r][c].get<std::string>();
      auto elem = q.elem_by_name(out.dom.obs.types[c], out.cod.obs.types[r], e);
      if (!elem) throw parse_error("matrix: element " + e + " outside its hom");
      flat[static_cast<size_t>(r) * cols + c] = *elem;
    }
  }
  out.mat = make_matrix(q, out.cod.obs, out.dom.obs, std::move(flat));
  return out;
}

void save_matrix(const EnrichedStructure& dom, const EnrichedStructure& cod,
                 const QMatrix& mat, const std::filesystem::path& file) {
  ordered_json j;
  j["kind"] = "matrix";
  j["dom"] = structure_to_json(dom);
  j["cod"] = structure_to_json(cod);
  ordered_json entries = ordered_json::array();
  for (int r = 0; r < cod.obs.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < dom.obs.size(); ++c)
      row.push_back(
          dom.base->elem_names(dom.obs.types[c], cod.obs.types[r])[mat.at(r, c)]);
    entries.push_back(row);
  }
  j["entries"] = entries;
  write_file(file, canonical(j));
}

MapFile load_map(const std::filesystem::path& file) {
  ordered_json j = parse_text(read_file(file), file.string());
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw parse_error("object map: missing dom/cod/map");
  MapFile out{structure_from_ref(j.at("dom"), file.parent_path()),
              structure_from_ref(j.at("cod"), file.parent_path()), {}};
  out.images.assign(out.dom.obs.size(), -1);
  for (int i = 0; i < out.dom.obs.size(); ++i) {
    std::string target = j.at("map").at(out.dom.obs.names[i]).get<std::string>();
    for (int y = 0; y < out.cod.obs.size(); ++y)
      if (out.cod.obs.names[y] == target) out.images[i] = y;
    if (out.images[i] < 0) throw parse_error("object map: unknown image " + target);
  }
  return out;
}

void save_map(const ObjectMap& map, const std::filesystem::path& file) {
  ordered_json j;
  j["kind"] = "object-map";
  j["dom"] = structure_to_json(map.dom);
  j["cod"] = structure_to_json(map.cod);
  ordered_json images;
  for (size_t i = 0; i < map.images.size(); ++i)
    images[map.dom.obs.names[i]] = map.cod.obs.names[map.images[i]];
  j["map"] = images;
  write_file(file, canonical(j));
}

void save_iso_witness(const IsoWitness& w, const std::filesystem::path& file) {
  ordered_json j;
  j["kind"] = "iso-witness";
  j["dom"] = structure_to_json(w.forward.dom);
  j["cod"] = structure_to_json(w.forward.cod);
  auto matrix_names = [](const SemiDistributor& sd) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < sd.cod.obs.size(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < sd.dom.obs.size(); ++c)
        row.push_back(sd.dom.base->elem_names(sd.dom.obs.types[c],
                                              sd.cod.obs.types[r])[sd.mat.at(r, c)]);
      rows.push_back(row);
    }
    return rows;
  };
  j["forward"] = matrix_names(w.forward);
  j["backward"] = matrix_names(w.backward);
  write_file(file, canonical(j));
}

void save_equiv_witness(const EquivWitness& w, const std::filesystem::path& file) {
  ordered_json j;
  j["kind"] = "equivalence-witness";
  ordered_json fwd, bwd;
  for (size_t i = 0; i < w.forward.images.size(); ++i)
    fwd[w.forward.dom.obs.names[i]] = w.forward.cod.obs.names[w.forward.images[i]];
  for (size_t i = 0; i < w.backward.images.size(); ++i)
    bwd[w.backward.dom.obs.names[i]] = w.backward.cod.obs.names[w.backward.images[i]];
  j["forward"] = fwd;
  j["backward"] = bwd;
  write_file(file, canonical(j));
}

void save_splitting_witness(const EnrichedStructure& a, const SplittingChoice& choice,
                            const std::filesystem::path& file) {
  const Quantaloid& q = *a.base;
  ordered_json j;
  j["kind"] = "splitting-witness";
  ordered_json entries = ordered_json::array();
  for (const SplitEntry& e : choice.entries) {
    ordered_json s;
    s["object"] = a.obs.names[e.object];
    s["monad"] = q.elem_names(e.monad.src, e.monad.dst)[e.monad.elem];
    s["via"] = q.object_name(e.via);
    s["f"] = q.elem_names(e.forward.src, e.forward.dst)[e.forward.elem];
    s["u"] = q.elem_names(e.backward.src, e.backward.dst)[e.backward.elem];
    entries.push_back(s);
  }
  j["splittings"] = entries;
  write_file(file, canonical(j));
}

void save_completion_table(const EnrichedStructure& source, const CompletionResult& c,
                           const std::filesystem::path& file) {
  const Quantaloid& q = *source.base;
  ordered_json j;
  j["kind"] = "completion-table";
  ordered_json objects = ordered_json::array();
  for (size_t i = 0; i < c.table.size(); ++i) {
    const ProbeEntry& p = c.table[i];
    ordered_json o;
    o["id"] = c.completed.obs.names[i];
    o["type"] = q.object_name(p.idem.src);
    o["idempotent"] = q.elem_names(p.idem.src, p.idem.src)[p.idem.elem];
    ordered_json probe = ordered_json::array();
    ordered_json adjoint = ordered_json::array();
    for (int y = 0; y < source.obs.size(); ++y) {
      probe.push_back(q.elem_names(p.idem.src, source.obs.types[y])[p.probe.at(y, 0)]);
      adjoint.push_back(q.elem_names(source.obs.types[y], p.idem.src)[p.adjoint.at(0, y)]);
    }
    o["probe"] = probe;
    o["adjoint"] = adjoint;
    objects.push_back(o);
  }
  j["objects"] = objects;
  ordered_json embedding;
  for (int x = 0; x < source.obs.size(); ++x)
    if (c.embed.images[x] >= 0)
      embedding[source.obs.names[x]] = c.completed.obs.names[c.embed.images[x]];
  j["embedding"] = embedding;
  write_file(file, canonical(j));
}

}  // namespace qorder::io
