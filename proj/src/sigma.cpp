#include "lebesgue/sigma.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lebesgue {

SpacePtr FiniteSpace::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::Validation, "a space needs at least one point");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorKind::Validation, "duplicate label '" + l + "'");
  return SpacePtr(new FiniteSpace(std::move(labels)));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteSpace::at(const std::string& label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "no point labelled '" + label + "'");
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && a->labels() == b->labels());
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* who) {
  if (!same_space(a, b)) throw Error(ErrorKind::SpaceMismatch, std::string(who) + ": operands live on different spaces");
}

// SubsetMask

SubsetMask::SubsetMask(SpacePtr space, std::vector<bool> bits) : space_(std::move(space)), bits_(std::move(bits)) {
  if (bits_.size() != space_->size()) throw Error(ErrorKind::SpaceMismatch, "mask length differs from space size");
}

SubsetMask SubsetMask::empty(SpacePtr space) {
  const auto n = space->size();
  return SubsetMask(std::move(space), std::vector<bool>(n, false));
}

SubsetMask SubsetMask::full(SpacePtr space) {
  const auto n = space->size();
  return SubsetMask(std::move(space), std::vector<bool>(n, true));
}

SubsetMask SubsetMask::of_labels(SpacePtr space, const std::vector<std::string>& labels) {
  std::vector<bool> bits(space->size(), false);
  for (const auto& l : labels) bits[space->at(l)] = true;
  return SubsetMask(std::move(space), std::move(bits));
}

SubsetMask SubsetMask::of_indices(SpacePtr space, const std::vector<std::size_t>& indices) {
  std::vector<bool> bits(space->size(), false);
  for (auto i : indices) bits.at(i) = true;
  return SubsetMask(std::move(space), std::move(bits));
}

std::size_t SubsetMask::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

bool SubsetMask::subset_of(const SubsetMask& other) const {
  require_same_space(space_, other.space_, "subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool SubsetMask::disjoint_from(const SubsetMask& other) const {
  require_same_space(space_, other.space_, "disjoint_from");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.bits_[i]) return false;
  return true;
}

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

std::vector<std::string> SubsetMask::labels() const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(space_->label(i));
  return out;
}

SubsetMask SubsetMask::complement() const {
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = !bits_[i];
  return SubsetMask(space_, std::move(bits));
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
  require_same_space(space_, o.space_, "union");
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = bits_[i] || o.bits_[i];
  return SubsetMask(space_, std::move(bits));
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
  require_same_space(space_, o.space_, "intersection");
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = bits_[i] && o.bits_[i];
  return SubsetMask(space_, std::move(bits));
}

SubsetMask SubsetMask::operator-(const SubsetMask& o) const {
  require_same_space(space_, o.space_, "difference");
  std::vector<bool> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = bits_[i] && !o.bits_[i];
  return SubsetMask(space_, std::move(bits));
}

// SigmaAlgebra

SigmaAlgebra SigmaAlgebra::generate(SpacePtr space, std::vector<SubsetMask> gen) {
  for (const auto& g : gen) require_same_space(space, g.space(), "generate_sigma");
  SigmaAlgebra sa;
  sa.space_ = space;
  sa.generator_ = std::move(gen);

  // Points with the same membership signature across the generator are
  // inseparable and share an atom. Atoms are numbered by first point.
  std::map<std::vector<bool>, std::size_t> by_signature;
  std::vector<std::vector<std::size_t>> blocks;
  sa.atom_of_.resize(space->size());
  for (std::size_t x = 0; x < space->size(); ++x) {
    std::vector<bool> sig;
    sig.reserve(sa.generator_.size());
    for (const auto& g : sa.generator_) sig.push_back(g.contains(x));
    auto [it, inserted] = by_signature.try_emplace(std::move(sig), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(x);
    sa.atom_of_[x] = it->second;
  }
  for (const auto& b : blocks) sa.atoms_.push_back(SubsetMask::of_indices(space, b));
  sa.atom_points_ = std::move(blocks);
  return sa;
}

SigmaAlgebra SigmaAlgebra::discrete(SpacePtr space) {
  std::vector<SubsetMask> gen;
  for (std::size_t i = 0; i < space->size(); ++i) gen.push_back(SubsetMask::of_indices(space, {i}));
  return generate(std::move(space), std::move(gen));
}

SigmaAlgebra SigmaAlgebra::trivial(SpacePtr space) { return generate(std::move(space), {}); }

bool SigmaAlgebra::is_measurable(const SubsetMask& a) const {
  require_same_space(space_, a.space(), "is_measurable");
  // A union of atoms contains either all or none of each atom.
  for (const auto& members : atom_points_) {
    const bool first = a.contains(members.front());
    for (auto i : members)
      if (a.contains(i) != first) return false;
  }
  return true;
}

SubsetMask SigmaAlgebra::union_of_atoms(const std::vector<bool>& which) const {
  std::vector<bool> bits(space_->size(), false);
  for (std::size_t x = 0; x < bits.size(); ++x) bits[x] = which.at(atom_of_[x]);
  return SubsetMask(space_, std::move(bits));
}

std::vector<SubsetMask> SigmaAlgebra::members() const {
  const std::size_t k = atoms_.size();
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    std::vector<bool> which(k);
    for (std::size_t j = 0; j < k; ++j) which[j] = (code >> j) & 1U;
    out.push_back(union_of_atoms(which));
  }
  return out;
}

namespace {

std::set<std::vector<std::size_t>> partition_of(const SigmaAlgebra& sa) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& a : sa.atoms()) out.insert(a.indices());
  return out;
}

bool generators_measurable_in(const SigmaAlgebra& from, const SigmaAlgebra& in) {
  return std::all_of(from.generator().begin(), from.generator().end(),
                     [&](const SubsetMask& g) { return in.is_measurable(g); });
}

}  // namespace

bool sigma_equal_generated(const SigmaAlgebra& sa1, const SigmaAlgebra& sa2) {
  require_same_space(sa1.space(), sa2.space(), "sigma_equal_generated");
  const bool by_atoms = partition_of(sa1) == partition_of(sa2);
  const bool by_generators = generators_measurable_in(sa1, sa2) && generators_measurable_in(sa2, sa1);
  if (by_atoms != by_generators)
    throw std::logic_error("sigma_equal_generated: atom and generator characterizations disagree");
  return by_atoms;
}

SpacePtr product_space(const SpacePtr& e, const SpacePtr& f) {
  std::vector<std::string> labels;
  labels.reserve(e->size() * f->size());
  for (const auto& a : e->labels())
    for (const auto& b : f->labels()) labels.push_back("(" + a + "," + b + ")");
  return FiniteSpace::make(std::move(labels));
}

SubsetMask product_mask(const SubsetMask& ae, const SubsetMask& af, const SpacePtr& prod) {
  const std::size_t nf = af.size();
  if (prod->size() != ae.size() * nf) throw Error(ErrorKind::SpaceMismatch, "product space has the wrong size");
  std::vector<bool> bits(prod->size());
  for (std::size_t i = 0; i < ae.size(); ++i)
    for (std::size_t j = 0; j < nf; ++j) bits[i * nf + j] = ae.contains(i) && af.contains(j);
  return SubsetMask(prod, std::move(bits));
}

ProductGenerator product_generator(const SpacePtr& e, const std::vector<SubsetMask>& gen_e, const SpacePtr& f,
                                   const std::vector<SubsetMask>& gen_f) {
  for (const auto& g : gen_e) require_same_space(e, g.space(), "product_generator");
  for (const auto& g : gen_f) require_same_space(f, g.space(), "product_generator");
  ProductGenerator out{product_space(e, f), {}};
  auto left = gen_e;
  left.push_back(SubsetMask::full(e));
  auto right = gen_f;
  right.push_back(SubsetMask::full(f));
  for (const auto& a : left)
    for (const auto& b : right) {
      auto m = product_mask(a, b, out.space);
      if (std::find(out.gen.begin(), out.gen.end(), m) == out.gen.end()) out.gen.push_back(std::move(m));
    }
  return out;
}

// PointFn

PointFn::PointFn(SpacePtr space, std::vector<XReal> values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) throw Error(ErrorKind::SpaceMismatch, "function length differs from space size");
}

PointFn PointFn::constant(SpacePtr space, const XReal& c) {
  const auto n = space->size();
  return PointFn(std::move(space), std::vector<XReal>(n, c));
}

bool PointFn::nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](const XReal& v) { return v.sign() >= 0; });
}

bool PointFn::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](const XReal& v) { return v.is_finite(); });
}

std::vector<XReal> PointFn::range() const {
  std::vector<XReal> r = values_;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

SubsetMask PointFn::preimage(const XReal& y) const {
  std::vector<bool> bits(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) bits[i] = values_[i] == y;
  return SubsetMask(space_, std::move(bits));
}

SubsetMask PointFn::differs_from(const PointFn& other) const {
  require_same_space(space_, other.space_, "differs_from");
  std::vector<bool> bits(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) bits[i] = values_[i] != other.values_[i];
  return SubsetMask(space_, std::move(bits));
}

bool PointFn::le(const PointFn& other) const {
  require_same_space(space_, other.space_, "le");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (other.values_[i] < values_[i]) return false;
  return true;
}

PointFn charac(const SubsetMask& a) {
  std::vector<XReal> v;
  v.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v.emplace_back(a.contains(i) ? 1 : 0);
  return PointFn(a.space(), std::move(v));
}

bool is_measurable_fn(const SigmaAlgebra& sa, const PointFn& f) {
  require_same_space(sa.space(), f.space(), "is_measurable_fn");
  for (const auto& y : f.range())
    if (!sa.is_measurable(f.preimage(y))) return false;
  return true;
}

namespace {

template <typename Op>
PointFn pointwise(const PointFn& f, const PointFn& g, const char* who, Op op) {
  require_same_space(f.space(), g.space(), who);
  std::vector<XReal> v;
  v.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v.push_back(op(f(i), g(i)));
  return PointFn(f.space(), std::move(v));
}

}  // namespace

FnSum fn_add(const PointFn& f, const PointFn& g) {
  bool legal = true;
  auto sum = pointwise(f, g, "fn_add", [&](const XReal& a, const XReal& b) {
    legal = legal && xadd_legal(a, b);
    return xadd(a, b);
  });
  return {std::move(sum), legal};
}

PointFn fn_mul(const PointFn& f, const PointFn& g) { return pointwise(f, g, "fn_mul", xmul); }

PointFn fn_scale(const XReal& a, const PointFn& f) {
  std::vector<XReal> v;
  v.reserve(f.size());
  for (const auto& x : f.values()) v.push_back(xmul(a, x));
  return PointFn(f.space(), std::move(v));
}

PointFn fn_min(const PointFn& f, const PointFn& g) {
  return pointwise(f, g, "fn_min", [](const XReal& a, const XReal& b) { return xmin(a, b); });
}

PointFn fn_max(const PointFn& f, const PointFn& g) {
  return pointwise(f, g, "fn_max", [](const XReal& a, const XReal& b) { return xmax(a, b); });
}

}  // namespace lebesgue
