#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

enum class ErrorKind {
  InvalidOrder,
  Arity,
  InvalidModule,
  ImproperIdeal,
  DegenerateLocalization,
  Validation,
  RingMismatch,
  Surjectivity,
  Containment,
  Malformed,
  Resource,
  Parse,
};

class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// A ring axiom failed during table validation.
class ValidationError : public RingError {
 public:
  ValidationError(std::string axiom, std::vector<Elem> witness)
      : RingError(ErrorKind::Validation, describe(axiom, witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<Elem>& w) {
    std::string s = "ring axiom violated: " + axiom;
    if (!w.empty()) {
      s += " at (";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
      }
      s += ")";
    }
    return s;
  }

  std::string axiom_;
  std::vector<Elem> witness_;
};

class ParseError : public RingError {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : RingError(ErrorKind::Parse, "parse error at " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace ringlab
