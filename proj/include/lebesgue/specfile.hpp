#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lebesgue/measure.hpp"
#include "lebesgue/sigma.hpp"
#include "lebesgue/xreal.hpp"

namespace lebesgue {

// Line-oriented description of a finite measure space and functions on it.
//
//   # comment
//   universe a b c
//   discrete                  every singleton joins the generator
//   generator a b             one generator set per line
//   measure counting          | measure dirac a | measure weights a=1 b=1/2 c=inf
//   function f a=1 b=0 c=inf
//   sequence s const f g f    tail tag: const | undefined
//
// Numbers are exact: "p", "-p", "p/q", "inf", "-inf".

struct SpecFile {
  struct MeasureDecl {
    enum class Kind { Counting, Dirac, Weights };
    Kind kind = Kind::Counting;
    std::string dirac_at;
    std::vector<XReal> weights;  // universe order
    friend bool operator==(const MeasureDecl&, const MeasureDecl&) = default;
  };
  struct FunctionDecl {
    std::string name;
    std::vector<XReal> values;  // universe order
    friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
  };
  struct SequenceDecl {
    std::string name;
    std::vector<std::string> members;
    bool constant_tail = true;
    friend bool operator==(const SequenceDecl&, const SequenceDecl&) = default;
  };

  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> generator;
  MeasureDecl measure;
  std::vector<FunctionDecl> functions;
  std::vector<SequenceDecl> sequences;

  const FunctionDecl* function(const std::string& name) const;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws Error(Parse) or Error(Validation); messages start with "line N:".
SpecFile parse_spec(std::istream& in);
SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec(const std::string& path);

/// Loadable text; parse_spec_text(print_spec(s)) == s.
std::string print_spec(const SpecFile& s);

/// The objects a spec file describes.
struct SpecModel {
  SpacePtr space;
  SigmaAlgebra sa;
  Measure measure;
  std::map<std::string, PointFn> functions;
  std::map<std::string, TaggedSeq<PointFn>> sequences;
};

/// Throws Validation when the measure cannot be built on the algebra.
SpecModel instantiate(const SpecFile& s);

}  // namespace lebesgue
