#include "lebesgue/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lebesgue {

const SpecFile::FunctionDecl* SpecFile::function(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

namespace {

std::string at_line(std::size_t line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

// Parses "label=value" pairs covering the universe exactly once.
std::vector<XReal> parse_point_map(const std::vector<std::string>& toks, std::size_t first,
                                   const std::vector<std::string>& universe, std::size_t line) {
  std::vector<std::optional<XReal>> slot(universe.size());
  for (std::size_t i = first; i < toks.size(); ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, at_line(line, "expected label=value, got '" + toks[i] + "'"));
    const std::string label = toks[i].substr(0, eq);
    auto it = std::find(universe.begin(), universe.end(), label);
    if (it == universe.end()) throw Error(ErrorKind::Validation, at_line(line, "unknown label '" + label + "'"));
    auto& s = slot[static_cast<std::size_t>(it - universe.begin())];
    if (s) throw Error(ErrorKind::Validation, at_line(line, "label '" + label + "' given twice"));
    try {
      s = XReal::parse(toks[i].substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, at_line(line, e.what()));
    }
  }
  std::vector<XReal> out;
  for (std::size_t i = 0; i < slot.size(); ++i) {
    if (!slot[i]) throw Error(ErrorKind::Validation, at_line(line, "no value for label '" + universe[i] + "'"));
    out.push_back(*slot[i]);
  }
  return out;
}

void require_label(const std::vector<std::string>& universe, const std::string& label, std::size_t line) {
  if (std::find(universe.begin(), universe.end(), label) == universe.end())
    throw Error(ErrorKind::Validation, at_line(line, "unknown label '" + label + "'"));
}

}  // namespace

SpecFile parse_spec(std::istream& in) {
  SpecFile s;
  bool have_universe = false;
  bool have_measure = false;
  std::size_t measure_line = 0;
  std::set<std::string> names;
  std::string raw;
  std::size_t line = 0;

  auto need_universe = [&](const std::string& what) {
    if (!have_universe) throw Error(ErrorKind::Parse, at_line(line, what + " before universe"));
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokens(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0];

    if (kw == "universe") {
      if (have_universe) throw Error(ErrorKind::Parse, at_line(line, "universe declared twice"));
      if (toks.size() < 2) throw Error(ErrorKind::Validation, at_line(line, "universe needs at least one point"));
      s.universe.assign(toks.begin() + 1, toks.end());
      std::set<std::string> seen(s.universe.begin(), s.universe.end());
      if (seen.size() != s.universe.size()) throw Error(ErrorKind::Validation, at_line(line, "duplicate label"));
      have_universe = true;
    } else if (kw == "discrete") {
      need_universe("discrete");
      for (const auto& l : s.universe) s.generator.push_back({l});
    } else if (kw == "generator") {
      need_universe("generator");
      std::vector<std::string> set(toks.begin() + 1, toks.end());
      for (const auto& l : set) require_label(s.universe, l, line);
      s.generator.push_back(std::move(set));
    } else if (kw == "measure") {
      need_universe("measure");
      if (have_measure) throw Error(ErrorKind::Parse, at_line(line, "measure declared twice"));
      if (toks.size() < 2) throw Error(ErrorKind::Parse, at_line(line, "measure kind missing"));
      if (toks[1] == "counting" && toks.size() == 2) {
        s.measure.kind = SpecFile::MeasureDecl::Kind::Counting;
      } else if (toks[1] == "dirac" && toks.size() == 3) {
        require_label(s.universe, toks[2], line);
        s.measure.kind = SpecFile::MeasureDecl::Kind::Dirac;
        s.measure.dirac_at = toks[2];
      } else if (toks[1] == "weights") {
        s.measure.kind = SpecFile::MeasureDecl::Kind::Weights;
        s.measure.weights = parse_point_map(toks, 2, s.universe, line);
        for (const auto& w : s.measure.weights)
          if (w.sign() < 0) throw Error(ErrorKind::Validation, at_line(line, "negative weight " + w.to_string()));
      } else {
        throw Error(ErrorKind::Parse, at_line(line, "expected 'counting', 'dirac LABEL' or 'weights ...'"));
      }
      have_measure = true;
      measure_line = line;
    } else if (kw == "function") {
      need_universe("function");
      if (toks.size() < 2) throw Error(ErrorKind::Parse, at_line(line, "function name missing"));
      if (!names.insert(toks[1]).second) throw Error(ErrorKind::Validation, at_line(line, "name '" + toks[1] + "' reused"));
      s.functions.push_back({toks[1], parse_point_map(toks, 2, s.universe, line)});
    } else if (kw == "sequence") {
      need_universe("sequence");
      if (toks.size() < 4) throw Error(ErrorKind::Parse, at_line(line, "expected: sequence NAME const|undefined F..."));
      SpecFile::SequenceDecl seq;
      seq.name = toks[1];
      if (toks[2] == "const")
        seq.constant_tail = true;
      else if (toks[2] == "undefined")
        seq.constant_tail = false;
      else
        throw Error(ErrorKind::Parse, at_line(line, "tail tag must be 'const' or 'undefined'"));
      seq.members.assign(toks.begin() + 3, toks.end());
      for (const auto& m : seq.members)
        if (!s.function(m)) throw Error(ErrorKind::Validation, at_line(line, "unknown function '" + m + "'"));
      if (!names.insert(seq.name).second)
        throw Error(ErrorKind::Validation, at_line(line, "name '" + seq.name + "' reused"));
      s.sequences.push_back(std::move(seq));
    } else {
      throw Error(ErrorKind::Parse, at_line(line, "unknown directive '" + kw + "'"));
    }
  }
  if (!have_universe) throw Error(ErrorKind::Parse, "missing universe line");
  if (!have_measure) throw Error(ErrorKind::Parse, "missing measure line");

  try {
    instantiate(s);
  } catch (const Error& e) {
    throw Error(ErrorKind::Validation, at_line(measure_line, e.what()));
  }
  return s;
}

SpecFile parse_spec_text(const std::string& text) {
  std::istringstream in(text);
  return parse_spec(in);
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  return parse_spec(in);
}

namespace {

void print_point_map(std::ostream& os, const std::vector<std::string>& universe, const std::vector<XReal>& values) {
  for (std::size_t i = 0; i < universe.size(); ++i) os << ' ' << universe[i] << '=' << values[i];
}

}  // namespace

std::string print_spec(const SpecFile& s) {
  std::ostringstream os;
  os << "universe";
  for (const auto& l : s.universe) os << ' ' << l;
  os << '\n';
  for (const auto& g : s.generator) {
    os << "generator";
    for (const auto& l : g) os << ' ' << l;
    os << '\n';
  }
  switch (s.measure.kind) {
    case SpecFile::MeasureDecl::Kind::Counting: os << "measure counting\n"; break;
    case SpecFile::MeasureDecl::Kind::Dirac: os << "measure dirac " << s.measure.dirac_at << '\n'; break;
    case SpecFile::MeasureDecl::Kind::Weights:
      os << "measure weights";
      print_point_map(os, s.universe, s.measure.weights);
      os << '\n';
      break;
  }
  for (const auto& f : s.functions) {
    os << "function " << f.name;
    print_point_map(os, s.universe, f.values);
    os << '\n';
  }
  for (const auto& q : s.sequences) {
    os << "sequence " << q.name << (q.constant_tail ? " const" : " undefined");
    for (const auto& m : q.members) os << ' ' << m;
    os << '\n';
  }
  return os.str();
}

SpecModel instantiate(const SpecFile& s) {
  auto space = FiniteSpace::make(s.universe);
  std::vector<SubsetMask> gen;
  for (const auto& g : s.generator) gen.push_back(SubsetMask::of_labels(space, g));
  auto sa = SigmaAlgebra::generate(space, std::move(gen));

  auto build_measure = [&]() {
    switch (s.measure.kind) {
      case SpecFile::MeasureDecl::Kind::Counting: return Measure::counting(sa);
      case SpecFile::MeasureDecl::Kind::Dirac: return Measure::dirac(sa, s.measure.dirac_at);
      case SpecFile::MeasureDecl::Kind::Weights: break;
    }
    return Measure::weighted(sa, s.measure.weights);
  };
  SpecModel model{space, sa, build_measure(), {}, {}};
  for (const auto& f : s.functions) model.functions.emplace(f.name, PointFn(space, f.values));
  for (const auto& q : s.sequences) {
    TaggedSeq<PointFn> seq;
    seq.tail = q.constant_tail ? TaggedSeq<PointFn>::Tail::ConstantAfterPrefix : TaggedSeq<PointFn>::Tail::Undefined;
    for (const auto& m : q.members) seq.prefix.push_back(model.functions.at(m));
    model.sequences.emplace(q.name, std::move(seq));
  }
  return model;
}

}  // namespace lebesgue
