#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>

#include "valueset/errors.hpp"
#include "valueset/parallel.hpp"

namespace valueset::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
T parse_number(const std::string& s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
  return value;
}

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const auto digits_ok = [](const std::string& t) {
    const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && std::all_of(t.begin() + start, t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto dot = s.find('.');
  if (dot != std::string::npos && slash == std::string::npos) {
    // decimal: a.b -> exact rational
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!digits_ok(whole) || frac.empty() || !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("not a number: '" + s + "'");
    }
    const bool negative = whole[0] == '-';
    mpz_class num(whole[0] == '+' ? whole.substr(1) : whole);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class tail(frac);
    mpq_class r(num * scale + (negative ? -tail : tail), scale);
    r.canonicalize();
    return r;
  }
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) throw InvalidInput("not a number: '" + s + "'");
  mpq_class r(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den[0] == '+' ? den.substr(1) : den));
  if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

bool known(const std::string& name, const auto& list) {
  return std::any_of(std::begin(list), std::end(list), [&](const char* c) { return name == c; });
}

}  // namespace

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number<std::uint64_t>(part));
  return out;
}

std::vector<std::int64_t> parse_i64_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number<std::int64_t>(part));
  return out;
}

std::vector<Interval> parse_window(const std::string& text) {
  std::vector<Interval> box;
  for (const auto& side : split(text, ',')) {
    const auto colon = side.find(':');
    if (colon == std::string::npos || side.find(':', colon + 1) != std::string::npos) {
      throw InvalidInput("window side must look like a:b, got '" + side + "'");
    }
    box.push_back({parse_rational(side.substr(0, colon)), parse_rational(side.substr(colon + 1))});
  }
  return box;
}

void validate(const RunConfig& config) {
  if (!known(config.command, kCommands)) throw InvalidInput("unknown command '" + config.command + "'");
  if (config.command == "verify" && !known(config.suite, kSuites)) {
    throw InvalidInput("unknown verify suite '" + config.suite + "'");
  }
  if (config.modulus && !config.primes.empty()) throw InvalidInput("give --modulus or --primes, not both");
  if (config.k && (*config.k < 2 || *config.k > 16)) throw InvalidInput("--k must lie in [2, 16]");
  if (config.bins == 0 || config.bins > 100000) throw InvalidInput("--bins must lie in [1, 100000]");
  if (config.threshold && !(*config.threshold >= 0)) throw InvalidInput("--threshold must be non-negative");
  if (config.format == Format::csv && config.command != "spacings") {
    throw InvalidInput("csv output is only produced by spacings");
  }
  if (config.command == "nk" && config.offsets.empty()) throw InvalidInput("nk needs --offsets");
  if (config.command == "nk" && config.k && static_cast<std::size_t>(*config.k) != config.offsets.size() + 1) {
    throw InvalidInput("--k must equal the number of offsets plus one");
  }
  if (config.command == "correlate") {
    if (!config.window) throw InvalidInput("correlate needs --window");
    const auto box = parse_window(*config.window);
    if (config.k && static_cast<std::size_t>(*config.k) != box.size() + 1) {
      throw InvalidInput("--k must equal the window dimension plus one");
    }
  }
}

IntPoly require_poly(const RunConfig& config) {
  if (!config.poly) throw InvalidInput("--poly is required for " + config.command);
  return IntPoly::parse(*config.poly);
}

std::optional<SquareFreeModulus> optional_modulus(const RunConfig& config) {
  if (config.modulus && !config.primes.empty()) throw InvalidInput("give --modulus or --primes, not both");
  if (config.modulus) {
    mpz_class q;
    if (q.set_str(*config.modulus, 10) != 0) throw InvalidInput("--modulus is not an integer: " + *config.modulus);
    return SquareFreeModulus::from_integer(q);
  }
  if (!config.primes.empty()) return SquareFreeModulus::from_primes(config.primes);
  return std::nullopt;
}

SquareFreeModulus require_modulus(const RunConfig& config) {
  auto m = optional_modulus(config);
  if (!m) throw InvalidInput("--modulus or --primes is required for " + config.command);
  return *m;
}

unsigned resolved_workers(const RunConfig& config) {
  return config.workers == 0 ? default_workers() : config.workers;
}

}  // namespace valueset::cli
