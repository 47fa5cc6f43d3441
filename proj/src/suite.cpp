#include "lebesgue/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

#include "lebesgue/lintp.hpp"
#include "lebesgue/simple.hpp"

namespace lebesgue {

bool SuiteReport::ok() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& [name, t] : other.tallies) {
    tallies[name].passed += t.passed;
    tallies[name].failed += t.failed;
  }
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
}

namespace {

class Recorder {
public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void record(const std::string& property, bool ok, const std::string& detail = {}) {
    auto& t = report_.tallies[property];
    if (ok) {
      ++t.passed;
    } else {
      ++t.failed;
      if (first_failure_.empty()) first_failure_ = property + (detail.empty() ? "" : ": " + detail);
    }
  }

  // Runs a check; a library error on valid input counts as a failure.
  void check(const std::string& property, const std::function<bool()>& body) {
    try {
      record(property, body());
    } catch (const std::exception& e) {
      record(property, false, e.what());
    }
  }

  const std::string& first_failure() const { return first_failure_; }

private:
  SuiteReport& report_;
  std::string first_failure_;
};

std::vector<SubsetMask> probe_sets(const SigmaAlgebra& sa) {
  std::vector<SubsetMask> probes{SubsetMask::empty(sa.space()), SubsetMask::full(sa.space())};
  auto add = [&](const SubsetMask& a) {
    if (std::find(probes.begin(), probes.end(), a) == probes.end()) probes.push_back(a);
  };
  for (const auto& a : sa.atoms()) {
    add(a);
    add(a.complement());
  }
  for (const auto& g : sa.generator()) {
    add(g);
    add(g.complement());
  }
  return probes;
}

TaggedSeq<SubsetMask> with_empty_tail(std::vector<SubsetMask> sets, const SpacePtr& space) {
  sets.push_back(SubsetMask::empty(space));
  return TaggedSeq<SubsetMask>::constant_after(std::move(sets));
}

TaggedSeq<SubsetMask> running_unions(const std::vector<SubsetMask>& sets) {
  std::vector<SubsetMask> out;
  for (const auto& a : sets) out.push_back(out.empty() ? a : (out.back() | a));
  return TaggedSeq<SubsetMask>::constant_after(std::move(out));
}

void measure_checks(Recorder& rec, const Measure& m) {
  const auto& sa = m.sa();
  const auto& space = sa.space();
  const auto probes = probe_sets(sa);

  rec.check("measure.additivity", [&] {
    for (const auto& a : probes)
      for (const auto& b : probes)
        if (a.disjoint_from(b) && m(a | b) != xadd(m(a), m(b))) return false;
    return true;
  });
  rec.check("measure.monotonicity", [&] {
    for (const auto& a : probes)
      for (const auto& b : probes)
        if (a.subset_of(b) && m(b) < m(a)) return false;
    return true;
  });
  rec.check("measure.decomposition", [&] {
    for (const auto& a : probes) {
      std::vector<XReal> parts;
      for (const auto& atom : sa.atoms()) parts.push_back(m(a & atom));
      if (m(a) != sum_list(parts)) return false;
    }
    return true;
  });
  rec.check("measure.sigma_additivity", [&] {
    if (!check_sigma_additivity(m, with_empty_tail(sa.atoms(), space))) return false;
    for (const auto& a : probes)
      if (!check_sigma_additivity(m, with_empty_tail({a, a.complement()}, space))) return false;
    return true;
  });
  rec.check("measure.boole", [&] { return check_boole(m, with_empty_tail(probes, space)); });
  rec.check("measure.continuity_from_below", [&] {
    return check_continuity_from_below(m, running_unions(sa.atoms())) &&
           check_continuity_from_below(m, running_unions(probes));
  });
  rec.check("measure.layers", [&] {
    const auto fam = running_unions(probes);
    const auto lay = layers(fam);
    for (std::size_t i = 0; i < lay.prefix.size(); ++i) {
      if (!sa.is_measurable(lay.prefix[i])) return false;
      for (std::size_t j = i + 1; j < lay.prefix.size(); ++j)
        if (!lay.prefix[i].disjoint_from(lay.prefix[j])) return false;
    }
    for (std::size_t n = 0; n < lay.prefix.size(); ++n)
      if (partial_union(lay, n) != partial_union(fam, n)) return false;
    return family_union(lay) == family_union(fam);
  });
  rec.check("measure.negligible_union", [&] {
    std::vector<SubsetMask> null_sets;
    for (const auto& a : probes)
      if (is_negligible(m, a)) null_sets.push_back(a);
    for (const auto& a : sa.atoms())
      if (m(a).is_zero()) null_sets.push_back(a);
    SubsetMask all = SubsetMask::empty(space);
    for (const auto& a : null_sets) {
      all = all | a;
      for (const auto& b : null_sets)
        if (!is_negligible(m, a | b)) return false;
    }
    return is_negligible(m, all) && (all.is_empty() || m(all).is_zero());
  });
}

void ae_checks(Recorder& rec, const Measure& m, const std::vector<PointFn>& fns) {
  rec.check("measure.ae_eq_equivalence", [&] {
    for (const auto& f : fns) {
      if (!ae_eq(m, f, f)) return false;
      for (const auto& g : fns) {
        if (ae_eq(m, f, g) != ae_eq(m, g, f)) return false;
        for (const auto& h : fns)
          if (ae_eq(m, f, g) && ae_eq(m, g, h) && !ae_eq(m, f, h)) return false;
      }
    }
    return true;
  });
}

void simple_checks(Recorder& rec, const Measure& m, const std::vector<PointFn>& fns) {
  std::vector<SimpleFunction> sfs;
  for (const auto& f : fns) {
    std::vector<XReal> v;
    for (const auto& x : f.values()) v.push_back(x.is_finite() ? x : XReal(0));
    sfs.push_back(make_sf(m.sa(), PointFn(f.space(), std::move(v))));
  }
  const std::vector<Rational> scalars{Rational(0), Rational(1, 3), Rational(2)};

  rec.check("simple.reconstruct", [&] {
    for (const auto& s : sfs)
      for (std::size_t x = 0; x < s.space()->size(); ++x)
        if (sf_reconstruct(s, x) != s.fn()(x)) return false;
    return true;
  });
  rec.check("simple.matches_lint_p", [&] {
    return std::all_of(sfs.begin(), sfs.end(), [&](const auto& s) { return lint_sfp(m, s) == lint_p(m, s.fn()); });
  });
  rec.check("simple.additivity", [&] {
    for (const auto& s : sfs)
      for (const auto& t : sfs)
        if (lint_sfp(m, sf_add(s, t)) != xadd(lint_sfp(m, s), lint_sfp(m, t))) return false;
    return true;
  });
  rec.check("simple.scaling", [&] {
    for (const auto& s : sfs)
      for (const auto& a : scalars)
        if (lint_sfp(m, sf_scale(a, s)) != xmul(XReal(a), lint_sfp(m, s))) return false;
    return true;
  });
  rec.check("simple.change_of_variable", [&] {
    for (const auto& s : sfs)
      for (const auto& t : sfs)
        for (const auto& y : s.canon())
          if (!check_change_of_variable(m, s, t, y)) return false;
    return true;
  });
}

void integral_checks(Recorder& rec, const Measure& m, const std::vector<PointFn>& fns) {
  const auto& sa = m.sa();
  const std::vector<XReal> scalars{XReal(0), XReal(Rational(1, 2)), XReal(3), XReal::pos_inf()};
  std::vector<SubsetMask> restrictions = probe_sets(sa);

  rec.check("lintp.adapted_sequence", [&] {
    for (const auto& f : fns) {
      XReal previous(0);
      for (unsigned n = 0; n <= 10; ++n) {
        const auto phi = mk_adapted_term(sa, f, n);
        const auto next = mk_adapted_term(sa, f, n + 1);
        if (!phi.fn().le(next.fn()) || !phi.fn().le(f)) return false;
        for (std::size_t x = 0; x < f.size(); ++x) {
          if (f(x).is_finite() && f(x).value() < n) {
            Rational bound(1);
            bound >>= n;
            if (f(x).value() - phi(x) > bound) return false;
          }
        }
        const XReal integral = lint_sfp(m, phi);
        if (integral < previous) return false;
        previous = integral;
      }
      if (lint_p(m, f) < previous) return false;
    }
    return true;
  });
  rec.check("lintp.table1", [&] {
    // One scalar and one restriction set per pair, rotating through both lists.
    std::size_t k = 0;
    for (const auto& f : fns)
      for (const auto& g : fns) {
        if (!lint_p_props(m, f, g, scalars[k % scalars.size()], restrictions[k % restrictions.size()]).all())
          return false;
        ++k;
      }
    return true;
  });
  rec.check("lintp.dirac", [&] {
    for (const auto& f : fns)
      for (std::size_t a = 0; a < sa.space()->size(); ++a) lint_p_dirac(sa, a, f);
    return true;
  });
  rec.check("lintp.beppo_levi", [&] {
    for (const auto& f : fns) {
      std::vector<PointFn> chain;
      for (long k = 0; k <= 3; ++k) chain.push_back(fn_min(f, PointFn::constant(sa.space(), XReal(k))));
      chain.push_back(f);
      if (!check_beppo_levi(m, TaggedSeq<PointFn>::constant_after(chain))) return false;
    }
    return true;
  });
  rec.check("lintp.fatou", [&] {
    for (const auto& f : fns)
      for (const auto& g : fns) {
        if (!check_fatou(m, TaggedSeq<PointFn>::constant_after({f, g, f, g}))) return false;
        if (!fatou_sides_periodic(m, {f, g}).holds()) return false;
      }
    return true;
  });
}

void sequence_checks(Recorder& rec, const Measure& m, const SpecModel& model) {
  for (const auto& [name, seq] : model.sequences) {
    if (!seq.stabilizes()) continue;
    const bool valid = std::all_of(seq.prefix.begin(), seq.prefix.end(), [&](const PointFn& f) {
      return f.nonnegative() && is_measurable_fn(m.sa(), f);
    });
    if (!valid) continue;
    bool nondecreasing = true;
    for (std::size_t n = 1; n < seq.prefix.size(); ++n) nondecreasing = nondecreasing && seq.prefix[n - 1].le(seq.prefix[n]);
    if (nondecreasing) rec.check("lintp.beppo_levi", [&] { return check_beppo_levi(m, seq); });
    rec.check("lintp.fatou", [&] { return check_fatou(m, seq); });
  }
}

}  // namespace

SuiteReport run_suite(const SpecFile& spec, const SuiteOptions& options) {
  SuiteReport report;
  Recorder rec(report);
  const SpecModel model = instantiate(spec);

  Measure m = model.measure;
  if (options.corrupt_measure) {
    const auto full = SubsetMask::full(model.space);
    const XReal total = m(full);
    m = m.corrupted(full, total.is_finite() ? xadd(total, XReal(1)) : XReal(0));
  }

  std::vector<PointFn> integrands;
  for (const auto& [name, f] : model.functions)
    if (f.nonnegative() && is_measurable_fn(model.sa, f)) integrands.push_back(f);

  measure_checks(rec, m);
  ae_checks(rec, m, integrands);
  simple_checks(rec, m, integrands);
  integral_checks(rec, m, integrands);
  sequence_checks(rec, m, model);

  if (!rec.first_failure().empty())
    report.counterexamples.push_back("# failed " + rec.first_failure() + "\n" + print_spec(spec));
  return report;
}

SpecFile random_spec(RandomCases& rc, std::size_t max_size) {
  const auto n = rc.uniform(1, std::max<std::size_t>(1, max_size));
  const auto space = rc.space(n);
  const auto sa = rc.sigma(space);

  SpecFile s;
  s.universe = space->labels();
  for (const auto& g : sa.generator()) s.generator.push_back(g.labels());

  const auto kind = rc.uniform(0, 9);
  if (kind == 0 && sa.is_discrete()) {
    s.measure.kind = SpecFile::MeasureDecl::Kind::Counting;
  } else if (kind == 1) {
    s.measure.kind = SpecFile::MeasureDecl::Kind::Dirac;
    s.measure.dirac_at = space->label(rc.uniform(0, n - 1));
  } else {
    s.measure.kind = SpecFile::MeasureDecl::Kind::Weights;
    s.measure.weights = rc.point_weights(sa);
  }

  std::vector<PointFn> fns{rc.measurable_fn(sa), rc.dyadic_measurable_fn(sa), rc.finite_measurable_fn(sa)};
  auto up = rc.nondecreasing_family(sa, rc.measurable_fn(sa), 4);
  auto mixed = rc.family(sa, 4);
  std::size_t next = 0;
  auto declare = [&](const PointFn& f) {
    const std::string name = "f" + std::to_string(next++);
    s.functions.push_back({name, f.values()});
    return name;
  };
  for (const auto& f : fns) declare(f);
  SpecFile::SequenceDecl up_decl{"up", {}, true};
  for (const auto& f : up.prefix) up_decl.members.push_back(declare(f));
  SpecFile::SequenceDecl mixed_decl{"mixed", {}, true};
  for (const auto& f : mixed.prefix) mixed_decl.members.push_back(declare(f));
  s.sequences.push_back(std::move(up_decl));
  s.sequences.push_back(std::move(mixed_decl));
  return s;
}

SuiteReport run_random_suite(std::uint64_t seed, std::size_t count, std::size_t max_size, const SuiteOptions& options) {
  auto run_case = [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::uint64_t case_seed = 0;
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    case_seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    RandomCases rc(case_seed);
    return run_suite(random_spec(rc, max_size), options);
  };

  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<SuiteReport> results(count);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) results[i] = run_case(i);
    }));
  for (auto& j : jobs) j.get();

  SuiteReport total;
  for (const auto& r : results) total.merge(r);
  return total;
}

}  // namespace lebesgue
