#include "simdiag/enumerated_group.hpp"

#include <algorithm>
#include <numeric>

#include "simdiag/errors.hpp"

namespace simdiag {

namespace {

std::uint64_t hash_images(std::span<const Point> images) {
  // FNV-1a over the byte representation
  std::uint64_t h = 1469598103934665603ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(images.data());
  for (std::size_t i = 0; i < images.size() * sizeof(Point); ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::size_t kWordWalkLimit = 96;

}  // namespace

Permutation EnumeratedGroup::element(ElemIdx i) const {
  auto img = images_of(i);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

void EnumeratedGroup::rebuild_index(std::size_t capacity) {
  std::size_t sz = 16;
  while (sz < capacity * 2) sz <<= 1;
  index_.slots.assign(sz, kNoElem);
  index_.mask = sz - 1;
  index_.count = 0;
  for (ElemIdx i = 0; i < order_; ++i) insert_index(i);
}

ElemIdx EnumeratedGroup::lookup(std::span<const Point> images) const {
  std::size_t pos = hash_images(images) & index_.mask;
  while (true) {
    ElemIdx slot = index_.slots[pos];
    if (slot == kNoElem) return kNoElem;
    if (std::equal(images.begin(), images.end(), images_of(slot).begin())) return slot;
    pos = (pos + 1) & index_.mask;
  }
}

void EnumeratedGroup::insert_index(ElemIdx idx) {
  std::size_t pos = hash_images(images_of(idx)) & index_.mask;
  while (index_.slots[pos] != kNoElem) pos = (pos + 1) & index_.mask;
  index_.slots[pos] = idx;
  ++index_.count;
}

std::optional<ElemIdx> EnumeratedGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  ElemIdx idx = lookup(images);
  if (idx == kNoElem) return std::nullopt;
  return idx;
}

ElemIdx EnumeratedGroup::mul(ElemIdx a, ElemIdx b) const {
  if (b == identity()) return a;
  if (a == identity()) return b;
  if (depth_[b] <= kWordWalkLimit) {
    std::uint8_t word[kWordWalkLimit];
    std::size_t len = 0;
    for (ElemIdx e = b; e != identity(); e = parent_[e]) word[len++] = via_gen_[e];
    ElemIdx r = a;
    while (len) r = mul_by_generator(r, word[--len]);
    return r;
  }
  // deep word (e.g. a large cyclic group): compose images directly
  auto ia = images_of(a);
  auto ib = images_of(b);
  std::vector<Point> prod(degree_);
  for (std::size_t p = 0; p < degree_; ++p) prod[p] = ib[ia[p]];
  ElemIdx r = lookup(prod);
  if (r == kNoElem) fail(ErrorKind::Internal, "product escaped enumerated group");
  return r;
}

ElemIdx EnumeratedGroup::power(ElemIdx a, std::uint64_t e) const {
  ElemIdx acc = identity();
  ElemIdx base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t EnumeratedGroup::element_order(ElemIdx a) const {
  std::uint32_t n = 1;
  ElemIdx x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::uint64_t EnumeratedGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes_) e = std::lcm(e, std::uint64_t(element_order(c.representative)));
  return e;
}

void EnumeratedGroup::compute_classes() {
  class_of_.assign(order_, static_cast<std::uint32_t>(-1));
  std::vector<std::vector<ElemIdx>> raw;
  for (ElemIdx start = 0; start < order_; ++start) {
    if (class_of_[start] != static_cast<std::uint32_t>(-1)) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
    std::vector<ElemIdx> members{start};
    class_of_[start] = cid;
    for (std::size_t head = 0; head < members.size(); ++head) {
      ElemIdx x = members[head];
      for (std::size_t j = 0; j < num_gens_; ++j) {
        ElemIdx y = conj_by_generator(x, j);
        if (class_of_[y] == static_cast<std::uint32_t>(-1)) {
          class_of_[y] = cid;
          members.push_back(y);
        }
      }
    }
    raw.push_back(std::move(members));
  }

  std::vector<std::uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (auto& m : raw) std::sort(m.begin(), m.end());
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a].front() < raw[b].front();
  });

  classes_.clear();
  classes_.reserve(raw.size());
  std::vector<std::uint32_t> relabel(raw.size());
  for (std::uint32_t newid = 0; newid < perm.size(); ++newid) {
    relabel[perm[newid]] = newid;
    ConjugacyClass c;
    c.members = std::move(raw[perm[newid]]);
    c.representative = c.members.front();
    classes_.push_back(std::move(c));
  }
  for (ElemIdx i = 0; i < order_; ++i) class_of_[i] = relabel[class_of_[i]];

  inverse_class_.resize(classes_.size());
  for (std::uint32_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inverse_[classes_[c].representative]];
}

EnumeratedGroup enumerate_group(std::vector<Permutation> generators, std::uint64_t order_cap) {
  if (generators.empty()) fail(ErrorKind::Usage, "no generators given");
  const std::size_t degree = generators.front().degree();
  if (degree == 0) fail(ErrorKind::Usage, "degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) fail(ErrorKind::DegreeMismatch, "generators have mixed degrees");

  EnumeratedGroup G;
  G.degree_ = degree;
  G.num_gens_ = generators.size();
  G.generators_ = std::move(generators);

  auto append_element = [&](std::span<const Point> img) {
    G.images_.insert(G.images_.end(), img.begin(), img.end());
    ++G.order_;
  };

  append_element(Permutation::identity(degree).images());
  G.rebuild_index(1024);
  G.insert_index(0);
  G.parent_.push_back(0);
  G.via_gen_.push_back(0);
  G.depth_.push_back(0);

  std::vector<ElemIdx> layer{0};
  std::vector<Point> scratch(degree);
  std::uint16_t depth = 0;

  while (!layer.empty()) {
    ++depth;
    // pass 1: find the distinct new elements reached from this layer
    std::vector<std::vector<Point>> fresh;
    for (ElemIdx e : layer) {
      auto src = G.images_of(e);
      for (std::size_t j = 0; j < G.num_gens_; ++j) {
        const auto& gen = G.generators_[j];
        for (std::size_t p = 0; p < degree; ++p) scratch[p] = gen[src[p]];
        if (G.lookup(scratch) == kNoElem) fresh.emplace_back(scratch.begin(), scratch.end());
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

    if (G.order_ + fresh.size() > order_cap)
      fail(ErrorKind::CapExceeded,
           "group closure exceeds order cap of " + std::to_string(order_cap));

    std::vector<ElemIdx> next;
    next.reserve(fresh.size());
    for (auto& img : fresh) {
      ElemIdx idx = G.order_;
      append_element(img);
      if (G.index_.count * 2 >= G.index_.slots.size())
        G.rebuild_index(G.order_);
      else
        G.insert_index(idx);
      G.parent_.push_back(kNoElem);
      G.via_gen_.push_back(0);
      G.depth_.push_back(depth);
      next.push_back(idx);
    }

    // pass 2: record product table entries and BFS witnesses
    G.mul_gen_.resize(static_cast<std::size_t>(G.order_) * G.num_gens_, kNoElem);
    for (ElemIdx e : layer) {
      auto src = G.images_of(e);
      for (std::size_t j = 0; j < G.num_gens_; ++j) {
        const auto& gen = G.generators_[j];
        for (std::size_t p = 0; p < degree; ++p) scratch[p] = gen[src[p]];
        ElemIdx idx = G.lookup(scratch);
        G.mul_gen_[static_cast<std::size_t>(e) * G.num_gens_ + j] = idx;
        if (G.parent_[idx] == kNoElem && idx != 0) {
          G.parent_[idx] = e;
          G.via_gen_[idx] = static_cast<std::uint8_t>(j);
        }
      }
    }
    layer = std::move(next);
  }

  // every element passed through exactly one layer, so the table is complete
  for (ElemIdx v : G.mul_gen_)
    if (v == kNoElem) fail(ErrorKind::Internal, "product table has holes");

  G.gen_index_.resize(G.num_gens_);
  for (std::size_t j = 0; j < G.num_gens_; ++j)
    G.gen_index_[j] = G.mul_gen_[static_cast<std::size_t>(0) * G.num_gens_ + j];

  // inverses
  G.inverse_.assign(G.order_, kNoElem);
  std::vector<Point> invimg(degree);
  for (ElemIdx i = 0; i < G.order_; ++i) {
    auto img = G.images_of(i);
    for (std::size_t p = 0; p < degree; ++p) invimg[img[p]] = static_cast<Point>(p);
    G.inverse_[i] = G.lookup(invimg);
  }

  // conjugation by each generator: g^{-1} x g
  G.conj_gen_.assign(static_cast<std::size_t>(G.order_) * G.num_gens_, kNoElem);
  for (std::size_t j = 0; j < G.num_gens_; ++j) {
    const auto& gen = G.generators_[j];
    Permutation geninv = gen.inverse();
    for (ElemIdx x = 0; x < G.order_; ++x) {
      auto img = G.images_of(x);
      for (std::size_t p = 0; p < degree; ++p) scratch[p] = gen[img[geninv[static_cast<Point>(p)]]];
      G.conj_gen_[static_cast<std::size_t>(x) * G.num_gens_ + j] = G.lookup(scratch);
    }
  }

  G.compute_classes();
  return G;
}

}  // namespace simdiag
