#include "qorder/enumerate.hpp"

namespace qorder {

bool has_class(const StructureFlags& flags, StructClass cls) {
  switch (cls) {
    case StructClass::any:
      return true;
    case StructClass::semicategory:
      return flags.semicategory;
    case StructClass::regular:
      return flags.regular;
    case StructClass::totally_regular:
      return flags.totally_regular;
    case StructClass::category:
      return flags.category;
    case StructClass::normal_category:
      return flags.normal;
  }
  return false;
}

void for_each_matrix(const Quantaloid& q, const TypedSet& rows, const TypedSet& cols,
                     const std::function<void(const QMatrix&)>& fn) {
  const int total = rows.size() * cols.size();
  std::vector<Elem> entries(total, 0);
  std::vector<int> sizes(total);
  for (int r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols.size(); ++c)
      sizes[r * cols.size() + c] = q.hom(cols.types[c], rows.types[r]).size();
  QMatrix mat{rows, cols, entries};
  while (true) {
    mat.entries = entries;
    fn(mat);
    int pos = total - 1;
    while (pos >= 0 && entries[pos] + 1 >= sizes[pos]) {
      entries[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++entries[pos];
  }
}

void for_each_object_map(const EnrichedStructure& dom, const EnrichedStructure& cod,
                         const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = dom.obs.size();
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < cod.obs.size(); ++y)
      if (cod.obs.types[y] == dom.obs.types[x]) candidates[x].push_back(y);
    if (candidates[x].empty()) return;
  }
  std::vector<size_t> pick(n, 0);
  while (true) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = candidates[x][pick[x]];
    if (fn(images)) return;
    int pos = n - 1;
    while (pos >= 0 && pick[pos] + 1 >= candidates[pos].size()) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++pick[pos];
  }
}

std::vector<EnrichedStructure> enumerate_structures(QuantaloidPtr base, int max_objects,
                                                    StructClass cls) {
  const Quantaloid& q = *base;
  std::vector<EnrichedStructure> out;
  for (int k = 0; k <= max_objects; ++k) {
    std::vector<Obj> types(k, 0);
    while (true) {
      TypedSet obs;
      obs.types = types;
      obs.names.resize(k);
      for (int i = 0; i < k; ++i) obs.names[i] = "a" + std::to_string(i);
      for_each_matrix(q, obs, obs, [&](const QMatrix& mat) {
        StructureFlags flags = classify(q, mat);
        if (!has_class(flags, cls)) return;
        out.push_back(EnrichedStructure{base, obs, mat, flags});
      });
      int pos = k - 1;
      while (pos >= 0 && types[pos] + 1 >= q.objects()) {
        types[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++types[pos];
    }
  }
  return out;
}

}  // namespace qorder
