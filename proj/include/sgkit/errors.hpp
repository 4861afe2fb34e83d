#ifndef SGKIT_ERRORS_HPP
#define SGKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgkit {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A multiplication table failed the associativity check; carries the
/// witnessing triple.
struct NotAssociative : Error {
  int x, y, z;
  NotAssociative(int x_, int y_, int z_)
      : Error("not associative: (x*y)*z != x*(y*z) at (" + std::to_string(x_) +
              ", " + std::to_string(y_) + ", " + std::to_string(z_) + ")"),
        x(x_),
        y(y_),
        z(z_) {}
};

struct OutOfRangeEntry : Error {
  int row, col, value;
  OutOfRangeEntry(int r, int c, int v)
      : Error("table entry out of range at (" + std::to_string(r) + ", " +
              std::to_string(c) + "): " + std::to_string(v)),
        row(r),
        col(c),
        value(v) {}
};

/// A claimed ideal is not closed under multiplication; carries a witness.
struct NotAnIdeal : Error {
  int member, multiplier;
  bool left_multiplier;
  NotAnIdeal(int m, int by, bool left)
      : Error("not an ideal: " + std::string(left ? "left" : "right") +
              " multiple of member " + std::to_string(m) + " by " +
              std::to_string(by) + " escapes the set"),
        member(m),
        multiplier(by),
        left_multiplier(left) {}
  explicit NotAnIdeal(const std::string& what)
      : Error(what), member(-1), multiplier(-1), left_multiplier(false) {}
};

struct NotCompletelySimple : Error {
  explicit NotCompletelySimple(const std::string& what) : Error(what) {}
};

struct NotRegular : Error {
  explicit NotRegular(const std::string& what) : Error(what) {}
};

struct InvalidSandwich : Error {
  explicit InvalidSandwich(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
  explicit NotPrime(int q) : Error("plane order must be prime, got " + std::to_string(q)) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct SamePoint : Error {
  explicit SamePoint(int p) : Error("join requires two distinct points, got " + std::to_string(p) + " twice") {}
};

/// The nilpotent template construction collapsed to e == f.
struct TemplateDegenerate : Error {
  explicit TemplateDegenerate(const std::string& what) : Error(what) {}
};

struct ClosureBudgetExceeded : Error {
  std::size_t budget;
  explicit ClosureBudgetExceeded(std::size_t b)
      : Error("closure exceeded member budget " + std::to_string(b)), budget(b) {}
};

/// The plane has too few points for the block-size bookkeeping to be decisive.
struct PlaneTooSmall : Error {
  explicit PlaneTooSmall(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace sgkit

#endif  // SGKIT_ERRORS_HPP
