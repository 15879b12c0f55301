#include "bbperc/beta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bbp {

namespace {

void check_spec(const BetaSeq& s) {
  if (s.tail.empty())
    throw std::invalid_argument("backbend spec needs a nonempty tail");
}

// Minimal period of the infinite repetition of `w` (divides |w|).
size_t minimal_period(const std::vector<uint32_t>& w) {
  for (size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i % p];
    if (ok) return p;
  }
  return w.size();
}

}  // namespace

uint32_t BetaSeq::at(int64_t h) const {
  check_spec(*this);
  if (h < 0) throw std::invalid_argument("record level must be >= 0");
  const int64_t p = static_cast<int64_t>(prefix.size());
  if (h < p) return prefix[static_cast<size_t>(h)];
  return tail[static_cast<size_t>((h - p) % static_cast<int64_t>(tail.size()))];
}

int64_t BetaSeq::floor_at(int64_t h) const {
  const uint32_t b = at(h);
  if (b == kBetaInf) return kFloorNegInf;
  return h - static_cast<int64_t>(b);
}

bool BetaSeq::monotone_floor() const {
  const int64_t hmax = horizon();
  int64_t prev = floor_at(0);
  for (int64_t h = 1; h <= hmax; ++h) {
    const int64_t cur = floor_at(h);
    if (cur != kFloorNegInf && prev != kFloorNegInf && cur < prev) return false;
    if (cur == kFloorNegInf && prev != kFloorNegInf) return false;
    prev = cur;
  }
  return true;
}

BetaSeq BetaSeq::canonical() const {
  check_spec(*this);
  BetaSeq c = *this;
  const size_t p = minimal_period(c.tail);
  c.tail.resize(p);
  // Absorb prefix entries that match the cyclic continuation: rotating the
  // tail right by one shifts the phase so the last prefix entry becomes the
  // tail's first value.
  while (!c.prefix.empty() && c.prefix.back() == c.tail.back()) {
    std::rotate(c.tail.rbegin(), c.tail.rbegin() + 1, c.tail.rend());
    c.prefix.pop_back();
  }
  return c;
}

bool BetaSeq::same_sequence(const BetaSeq& o) const {
  return canonical() == o.canonical();
}

bool BetaSeq::dominated_by(const BetaSeq& o) const {
  check_spec(*this);
  check_spec(o);
  // Beyond both prefixes the pair of sequences is jointly periodic with
  // period lcm(|tail|, |o.tail|); one joint period decides the rest.
  const int64_t start =
      std::max<int64_t>(prefix.size(), o.prefix.size());
  const int64_t period =
      std::lcm<int64_t>(static_cast<int64_t>(tail.size()),
                        static_cast<int64_t>(o.tail.size()));
  for (int64_t h = 0; h < start + period; ++h) {
    const uint32_t a = at(h), b = o.at(h);
    if (b == kBetaInf) continue;
    if (a == kBetaInf || a > b) return false;
  }
  return true;
}

std::string BetaSeq::to_string() const {
  check_spec(*this);
  auto val = [](uint32_t v) {
    return v == kBetaInf ? std::string("inf") : std::to_string(v);
  };
  std::string out;
  if (!prefix.empty()) {
    out += "prefix:";
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (i) out += ',';
      out += val(prefix[i]);
    }
    out += ';';
  }
  if (tail.size() == 1) {
    out += tail[0] == kBetaInf ? "inf" : "const:" + std::to_string(tail[0]);
  } else {
    out += "cyclic:";
    for (size_t i = 0; i < tail.size(); ++i) {
      if (i) out += ',';
      out += val(tail[i]);
    }
  }
  return out;
}

namespace {

uint32_t parse_value(const std::string& s) {
  if (s == "inf") return kBetaInf;
  size_t pos = 0;
  unsigned long v;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad backbend value '" + s + "'");
  }
  if (pos != s.size() || v >= kBetaInf)
    throw std::invalid_argument("bad backbend value '" + s + "'");
  return static_cast<uint32_t>(v);
}

std::vector<uint32_t> parse_values(const std::string& s) {
  std::vector<uint32_t> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(',', start);
    out.push_back(parse_value(
        s.substr(start, p == std::string::npos ? p : p - start)));
    if (p == std::string::npos) return out;
    start = p + 1;
  }
}

}  // namespace

BetaSeq parse_beta(const std::string& text) {
  BetaSeq s;
  std::string rest = text;
  if (rest.rfind("prefix:", 0) == 0) {
    const size_t semi = rest.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("prefix spec needs ';<tail>'");
    s.prefix = parse_values(rest.substr(7, semi - 7));
    rest = rest.substr(semi + 1);
  }
  if (rest == "inf") {
    s.tail = {kBetaInf};
  } else if (rest.rfind("const:", 0) == 0) {
    s.tail = {parse_value(rest.substr(6))};
  } else if (rest.rfind("cyclic:", 0) == 0) {
    s.tail = parse_values(rest.substr(7));
  } else {
    throw std::invalid_argument("bad backbend spec '" + text + "'");
  }
  if (s.tail.empty())
    throw std::invalid_argument("bad backbend spec '" + text + "'");
  return s;
}

BetaSeq beta_const(uint32_t b) { return BetaSeq{{}, {b}}; }
BetaSeq beta_unoriented() { return BetaSeq{{}, {kBetaInf}}; }
BetaSeq beta_cyclic(std::vector<uint32_t> tail) {
  BetaSeq s;
  s.tail = std::move(tail);
  check_spec(s);
  return s;
}

SequenceClass classify(const BetaSeq& spec) {
  const BetaSeq c = spec.canonical();
  const size_t k = c.tail.size();
  const bool tail_finite =
      std::none_of(c.tail.begin(), c.tail.end(),
                   [](uint32_t v) { return v == kBetaInf; });

  if (c.prefix.empty()) {
    if (k == 1) {
      if (c.tail[0] == 0) return {SequenceClass::Kind::Oriented, 0};
      if (c.tail[0] == kBetaInf) return {SequenceClass::Kind::Unoriented, 0};
      return {SequenceClass::Kind::BBackbend, c.tail[0]};
    }
    if (tail_finite)
      return {SequenceClass::Kind::KCyclic, static_cast<uint32_t>(k)};
    // Periodic but with inf entries: not k-cyclic in the paper's sense.
    return {SequenceClass::Kind::General, static_cast<uint32_t>(k)};
  }

  if (tail_finite) {
    // Limit sequence value at level h: the tail entry the phase h lands on.
    const int64_t p = static_cast<int64_t>(c.prefix.size());
    auto limit_at = [&](int64_t h) {
      const int64_t i = ((h - p) % static_cast<int64_t>(k) +
                         static_cast<int64_t>(k)) %
                        static_cast<int64_t>(k);
      return c.tail[static_cast<size_t>(i)];
    };
    bool from_below = true;
    for (int64_t h = 0; h < p && from_below; ++h) {
      const uint32_t v = c.prefix[static_cast<size_t>(h)];
      from_below = v != kBetaInf && v <= limit_at(h);
    }
    if (from_below)
      return {SequenceClass::Kind::CyclicLimitFromBelow,
              static_cast<uint32_t>(k)};
    return {SequenceClass::Kind::General, static_cast<uint32_t>(k)};
  }
  return {SequenceClass::Kind::General, 0};
}

std::string to_string(SequenceClass::Kind k) {
  switch (k) {
    case SequenceClass::Kind::Oriented:
      return "oriented";
    case SequenceClass::Kind::BBackbend:
      return "b_backbend";
    case SequenceClass::Kind::Unoriented:
      return "unoriented";
    case SequenceClass::Kind::KCyclic:
      return "k_cyclic";
    case SequenceClass::Kind::CyclicLimitFromBelow:
      return "cyclic_limit_from_below";
    case SequenceClass::Kind::General:
      return "general";
  }
  return "?";
}

}  // namespace bbp
