#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "frobschur/errors.hpp"
#include "frobschur/rational.hpp"

namespace frobschur {

enum class SequenceKind { zero, special, custom };

/// What happens when a custom window is read outside [lo, hi]: strict throws
/// WindowExceeded, permissive returns 0 and raises the shared flag.
enum class WindowPolicy { strict, permissive };

/// A doubly infinite parameter sequence (a_i), i in Z.
///
/// `special` is a_i = i - 1/2; shifting keeps it in the family
/// a_i = i + r - 1/2, and it is self-dual. Custom sequences are finite
/// windows; shifts and duals move the window.
class ParamSequence {
 public:
  ParamSequence() = default;

  static ParamSequence zero() { return ParamSequence(); }

  static ParamSequence special() {
    ParamSequence s;
    s.kind_ = SequenceKind::special;
    return s;
  }

  /// Window [lo, hi] spans the given indices; unlisted indices inside it are 0.
  static ParamSequence custom(std::map<long, Rational> values, WindowPolicy policy = WindowPolicy::strict) {
    if (values.empty()) throw DomainError("a custom parameter window needs at least one entry");
    ParamSequence s;
    s.kind_ = SequenceKind::custom;
    for (auto& [i, v] : values) v.canonicalize();
    s.lo_ = values.begin()->first;
    s.hi_ = values.rbegin()->first;
    s.values_ = std::move(values);
    s.policy_ = policy;
    return s;
  }

  /// Custom sequence with values a_lo, a_{lo+1}, ...
  static ParamSequence custom_range(long lo, const std::vector<Rational>& values,
                                    WindowPolicy policy = WindowPolicy::strict) {
    std::map<long, Rational> m;
    for (std::size_t k = 0; k < values.size(); ++k) m.emplace(lo + static_cast<long>(k), values[k]);
    return custom(std::move(m), policy);
  }

  SequenceKind kind() const noexcept { return kind_; }
  WindowPolicy policy() const noexcept { return policy_; }
  long window_lo() const noexcept { return lo_; }
  long window_hi() const noexcept { return hi_; }

  ParamSequence with_policy(WindowPolicy policy) const {
    ParamSequence s = *this;
    s.policy_ = policy;
    return s;
  }

  /// Copy with its own window flag.
  ParamSequence detached(WindowPolicy policy) const {
    ParamSequence s = *this;
    s.policy_ = policy;
    s.flag_ = std::make_shared<std::atomic<bool>>(false);
    return s;
  }

  /// Throws WindowExceeded unless a custom window (strict) covers [from, to].
  void require_window(long from, long to) const {
    if (kind_ != SequenceKind::custom || policy_ != WindowPolicy::strict || from > to) return;
    if (from < lo_) throw WindowExceeded(from);
    if (to > hi_) throw WindowExceeded(to);
  }

  /// True once a permissive read fell outside the window (shared with every
  /// sequence derived from this one).
  bool window_exceeded() const noexcept { return flag_->load(); }
  void clear_window_flag() const noexcept { flag_->store(false); }

  Rational at(long i) const {
    switch (kind_) {
      case SequenceKind::zero: return 0;
      case SequenceKind::special: return Rational(2 * (i + offset_) - 1, 2);
      case SequenceKind::custom: {
        if (i < lo_ || i > hi_) {
          if (policy_ == WindowPolicy::strict) throw WindowExceeded(i);
          flag_->store(true);
          return 0;
        }
        auto it = values_.find(i);
        return it == values_.end() ? Rational(0) : it->second;
      }
    }
    return 0;
  }

  Rational operator[](long i) const { return at(i); }

  /// a_from, ..., a_to (empty when to < from).
  std::vector<Rational> values(long from, long to) const {
    std::vector<Rational> out;
    for (long i = from; i <= to; ++i) out.push_back(at(i));
    return out;
  }

  /// (tau^r a)_i = a_{i+r}.
  ParamSequence shift(long r) const {
    ParamSequence s = *this;
    if (kind_ == SequenceKind::special) s.offset_ += r;
    if (kind_ == SequenceKind::custom) {
      s.values_.clear();
      for (const auto& [i, v] : values_) s.values_.emplace(i - r, v);
      s.lo_ = lo_ - r;
      s.hi_ = hi_ - r;
    }
    return s;
  }

  /// The dual sequence: dual_i = -a_{1-i}.
  ParamSequence dual() const {
    ParamSequence s = *this;
    if (kind_ == SequenceKind::special) s.offset_ = -offset_;
    if (kind_ == SequenceKind::custom) {
      s.values_.clear();
      for (const auto& [i, v] : values_) s.values_.emplace(1 - i, -v);
      s.lo_ = 1 - hi_;
      s.hi_ = 1 - lo_;
    }
    return s;
  }

  /// Same values at every index (custom windows must also match in extent).
  bool operator==(const ParamSequence& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == SequenceKind::special) return offset_ == o.offset_;
    if (kind_ == SequenceKind::custom) {
      if (lo_ != o.lo_ || hi_ != o.hi_) return false;
      for (long i = lo_; i <= hi_; ++i)
        if (at(i) != o.at(i)) return false;
    }
    return true;
  }

 private:
  friend std::string to_string(const ParamSequence& a);

  SequenceKind kind_ = SequenceKind::zero;
  long offset_ = 0;
  long lo_ = 0;
  long hi_ = -1;
  std::map<long, Rational> values_;
  WindowPolicy policy_ = WindowPolicy::strict;
  std::shared_ptr<std::atomic<bool>> flag_ = std::make_shared<std::atomic<bool>>(false);
};

/// `zero`, `special`, or `custom:i=v,i=v,...`.
inline ParamSequence parse_params(std::string_view text, WindowPolicy policy = WindowPolicy::strict) {
  auto s = detail::trim(text);
  if (s == "zero") return ParamSequence::zero();
  if (s == "special") return ParamSequence::special();
  constexpr std::string_view prefix = "custom:";
  if (s.substr(0, prefix.size()) != prefix)
    throw ParseError("unknown parameter sequence '" + std::string(text) + "'");
  std::map<long, Rational> values;
  auto body = detail::trim(s.substr(prefix.size()));
  if (body.empty()) throw ParseError("custom parameter sequence has no entries");
  for (auto tok : detail::split(body, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected i=v in '" + std::string(tok) + "'");
    auto idx = detail::trim(tok.substr(0, eq));
    if (!detail::is_integer_text(idx) || idx.size() > 9)
      throw ParseError("malformed index in '" + std::string(tok) + "'");
    long i = std::stol(std::string(idx));
    if (!values.emplace(i, parse_rational(tok.substr(eq + 1))).second)
      throw ParseError("duplicate index " + std::to_string(i) + " in custom sequence");
  }
  return ParamSequence::custom(std::move(values), policy);
}

inline std::string to_string(const ParamSequence& a) {
  switch (a.kind_) {
    case SequenceKind::zero: return "zero";
    case SequenceKind::special:
      return a.offset_ == 0 ? "special" : "special(shift " + std::to_string(a.offset_) + ")";
    case SequenceKind::custom: {
      std::string out = "custom:";
      for (long i = a.lo_; i <= a.hi_; ++i) {
        if (i != a.lo_) out += ',';
        out += std::to_string(i) + "=" + to_string(a.at(i));
      }
      return out;
    }
  }
  return "";
}

}  // namespace frobschur
