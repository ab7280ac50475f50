#include "affrep/affcount.hpp"

#include <array>
#include <random>

#include "affrep/error.hpp"
#include "parallel.hpp"

namespace affrep::count {

namespace {

using Clock = std::chrono::steady_clock;

void check_genus(unsigned genus) {
  if (genus == 0) throw Error(ErrorKind::GenusOutOfRange, "genus must be at least 1");
}

// base^exp, or nullopt once the running product passes limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

void check_budget(std::uint64_t base, unsigned exp, std::uint64_t guard, std::string_view what) {
  if (!bounded_pow(base, exp, guard)) {
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + ": " + std::to_string(base) + "^" +
                                               std::to_string(exp) + " exceeds the guard " +
                                               std::to_string(guard));
  }
}

CountRecord make_record(const ff::FieldRef& field, unsigned genus, Engine engine) {
  CountRecord rec;
  rec.p = field->p();
  rec.n = field->n();
  rec.q = field->order();
  rec.genus = genus;
  rec.engine = engine;
  return rec;
}

// Aff(1, F_q) on field-table indices.
struct RawAff {
  std::uint32_t a;
  std::uint32_t b;
};

struct RawAffOps {
  const ff::FieldTables& f;

  RawAff mul(RawAff x, RawAff y) const noexcept {
    return {f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), x.b)};
  }
  RawAff inv(RawAff x) const noexcept {
    const auto ai = f.inv_table[x.a];
    return {ai, f.neg_table[f.mul(ai, x.b)]};
  }
  RawAff commutator(RawAff x, RawAff y) const noexcept { return mul(mul(x, y), mul(inv(x), inv(y))); }
  RawAff identity() const noexcept { return {f.one, f.zero}; }
};

struct RankHistogram {
  std::array<std::uint64_t, 2> by_rank{};

  friend RankHistogram operator+(RankHistogram lhs, const RankHistogram& rhs) {
    for (std::size_t r = 0; r < lhs.by_rank.size(); ++r) lhs.by_rank[r] += rhs.by_rank[r];
    return lhs;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// AffElem

AffElem::AffElem(ff::FqElem a, ff::FqElem b) : a_(std::move(a)), b_(std::move(b)) {
  if (*a_.field() != *b_.field()) throw Error(ErrorKind::FieldMismatch, "a and b from different fields");
  if (a_.is_zero()) throw Error(ErrorKind::InvalidArgument, "Aff(1) element needs a != 0");
}

AffElem AffElem::identity(const ff::FieldRef& field) {
  return AffElem(ff::FqElem::one(field), ff::FqElem::zero(field));
}

AffElem operator*(const AffElem& x, const AffElem& y) {
  return AffElem(x.a() * y.a(), x.a() * y.b() + x.b());
}

AffElem inverse(const AffElem& x) {
  auto ai = ff::inverse(x.a());
  auto b = -(ai * x.b());
  return AffElem(std::move(ai), std::move(b));
}

AffElem commutator(const AffElem& x, const AffElem& y) { return x * y * inverse(x) * inverse(y); }

std::vector<AffElem> enumerate_group(const ff::FieldRef& field) {
  const auto elems = ff::enumerate(field);
  std::vector<AffElem> out;
  out.reserve(field->order() * (field->order() - 1));
  for (const auto& a : elems) {
    if (a.is_zero()) continue;
    for (const auto& b : elems) out.emplace_back(a, b);
  }
  return out;
}

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::Naive: return "naive";
    case Engine::Semi: return "semi";
    case Engine::Closed: return "closed";
    case Engine::Generic: return "generic";
  }
  return "unknown";
}

Engine parse_engine(std::string_view text) {
  for (auto e : {Engine::Naive, Engine::Semi, Engine::Closed, Engine::Generic}) {
    if (text == to_string(e)) return e;
  }
  throw Error(ErrorKind::ParseError, "unknown engine '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Engines

CountRecord count_naive(const ff::FieldRef& field, unsigned genus, const CountOptions& options) {
  check_genus(genus);
  const auto start = Clock::now();
  const std::uint64_t q = field->order();
  const unsigned slots = 2 * genus;
  check_budget(q * (q - 1), slots, options.guard, "naive enumeration");

  const ff::FieldTables tables(field);
  const RawAffOps ops{tables};
  std::vector<RawAff> group;
  for (std::uint32_t a = 0; a < tables.order; ++a) {
    if (a == tables.zero) continue;
    for (std::uint32_t b = 0; b < tables.order; ++b) group.push_back({a, b});
  }
  const std::size_t order = group.size();
  const RawAff id = ops.identity();

  const auto solutions = detail::parallel_reduce<std::uint64_t>(
      order, options.threads, 0, [&](std::uint64_t first_lo, std::uint64_t first_hi) {
        std::uint64_t local = 0;
        std::vector<std::size_t> digit(slots, 0);
        // prefix[k] = product of the first k commutators.
        std::vector<RawAff> prefix(genus + 1, id);
        digit[0] = first_lo;
        auto refresh_from = [&](unsigned pair) {
          for (unsigned k = pair; k < genus; ++k) {
            prefix[k + 1] = ops.mul(prefix[k], ops.commutator(group[digit[2 * k]], group[digit[2 * k + 1]]));
          }
        };
        if (first_lo >= first_hi) return local;
        refresh_from(0);
        while (true) {
          const RawAff& total = prefix[genus];
          if (total.a == id.a && total.b == id.b) ++local;
          // Odometer, last slot fastest.
          unsigned pos = slots;
          while (pos-- > 0) {
            if (++digit[pos] < (pos == 0 ? first_hi : order)) break;
            if (pos == 0) return local;
            digit[pos] = 0;
          }
          refresh_from(pos / 2);
        }
      });

  CountRecord rec = make_record(field, genus, Engine::Naive);
  rec.count = Integer(std::to_string(solutions));
  rec.elapsed = Clock::now() - start;
  return rec;
}

CountRecord count_semi(const ff::FieldRef& field, unsigned genus, const CountOptions& options) {
  check_genus(genus);
  const auto start = Clock::now();
  const std::uint64_t q = field->order();
  const unsigned slots = 2 * genus;
  check_budget(q - 1, slots, options.guard, "semi enumeration");

  const ff::FieldTables tables(field);
  // alpha_i = a_i - 1 for a_i in F_q^*, which is exactly F_q minus {-1}.
  std::vector<std::uint32_t> alphas;
  for (std::uint32_t a = 0; a < tables.order; ++a) {
    if (a != tables.zero) alphas.push_back(tables.sub(a, tables.one));
  }
  const std::size_t width = alphas.size();
  const bool verify = options.verify_kernel && q <= 5;

  // Number of beta in F_q^slots with sum alpha_i beta_i = 0, by enumeration.
  auto kernel_by_enumeration = [&](const std::vector<std::size_t>& digit) {
    std::uint64_t hits = 0;
    std::vector<std::uint32_t> beta(slots, 0);
    while (true) {
      std::uint32_t acc = tables.zero;
      for (unsigned i = 0; i < slots; ++i) acc = tables.add(acc, tables.mul(alphas[digit[i]], beta[i]));
      if (acc == tables.zero) ++hits;
      unsigned pos = 0;
      while (pos < slots && ++beta[pos] == tables.order) beta[pos++] = 0;
      if (pos == slots) return hits;
    }
  };
  const auto q_pow = [&](unsigned e) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= q;
    return acc;
  };

  const auto hist = detail::parallel_reduce<RankHistogram>(
      width, options.threads, RankHistogram{}, [&](std::uint64_t first_lo, std::uint64_t first_hi) {
        RankHistogram local;
        if (first_lo >= first_hi) return local;
        std::vector<std::size_t> digit(slots, 0);
        digit[0] = first_lo;
        // Nonzero coordinates of alpha, maintained incrementally.
        unsigned nonzero = 0;
        for (unsigned i = 0; i < slots; ++i) nonzero += alphas[digit[i]] != tables.zero;
        while (true) {
          // The linear form beta -> <alpha, beta> has rank 1 unless alpha = 0.
          const unsigned rank = nonzero > 0 ? 1 : 0;
          ++local.by_rank[rank];
          if (verify && kernel_by_enumeration(digit) != q_pow(slots - rank)) {
            throw Error(ErrorKind::InternalConsistency, "kernel size disagrees with rank");
          }
          unsigned pos = slots;
          while (pos-- > 0) {
            nonzero -= alphas[digit[pos]] != tables.zero;
            if (++digit[pos] < (pos == 0 ? first_hi : width)) {
              nonzero += alphas[digit[pos]] != tables.zero;
              break;
            }
            if (pos == 0) return local;
            digit[pos] = 0;
            nonzero += alphas[0] != tables.zero;
          }
        }
      });

  CountRecord rec = make_record(field, genus, Engine::Semi);
  const Integer qz(std::to_string(q));
  Integer total = 0;
  for (unsigned rank = 0; rank < hist.by_rank.size(); ++rank) {
    Integer kernel;
    mpz_pow_ui(kernel.get_mpz_t(), qz.get_mpz_t(), slots - rank);
    total += Integer(std::to_string(hist.by_rank[rank])) * kernel;
  }
  rec.count = total;
  rec.elapsed = Clock::now() - start;
  return rec;
}

Integer count_closed(const Integer& q, unsigned genus) {
  check_genus(genus);
  const unsigned s = 2 * genus;
  Integer q_s1, qm1_s, q_s;
  mpz_pow_ui(q_s1.get_mpz_t(), q.get_mpz_t(), s - 1);
  const Integer qm1 = q - 1;
  mpz_pow_ui(qm1_s.get_mpz_t(), qm1.get_mpz_t(), s);
  mpz_pow_ui(q_s.get_mpz_t(), q.get_mpz_t(), s);
  return q_s1 * qm1_s + q_s - q_s1;
}

CountRecord count_closed(const ff::FieldRef& field, unsigned genus) {
  const auto start = Clock::now();
  CountRecord rec = make_record(field, genus, Engine::Closed);
  rec.count = count_closed(Integer(std::to_string(field->order())), genus);
  rec.elapsed = Clock::now() - start;
  return rec;
}

CountRecord run_engine(Engine engine, const ff::FieldRef& field, unsigned genus, const CountOptions& options) {
  switch (engine) {
    case Engine::Naive: return count_naive(field, genus, options);
    case Engine::Semi: return count_semi(field, genus, options);
    case Engine::Closed: return count_closed(field, genus);
    case Engine::Generic: {
      check_genus(genus);
      const auto start = Clock::now();
      const std::uint64_t q = field->order();
      check_budget(q * (q - 1), 2 * genus, options.guard, "generic enumeration");
      CountRecord rec = make_record(field, genus, Engine::Generic);
      rec.count = count_group_generic(aff_group_table(field), genus, options);
      rec.elapsed = Clock::now() - start;
      return rec;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown engine");
}

// ---------------------------------------------------------------------------
// Opaque group tables

void validate_group_table(const GroupTable& table) {
  const std::size_t n = table.order;
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidGroupTable, msg); };
  if (n == 0) fail("empty group");
  if (table.mul.size() != n * n) fail("table size is not order^2");
  if (table.identity >= n) fail("identity index out of range");
  for (auto v : table.mul) {
    if (v >= n) fail("entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (table.product(table.identity, x) != x || table.product(x, table.identity) != x) {
      fail("identity law fails at " + std::to_string(x));
    }
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) {
      has_inverse = table.product(x, y) == table.identity && table.product(y, x) == table.identity;
    }
    if (!has_inverse) fail("no inverse for " + std::to_string(x));
  }
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (table.product(table.product(x, y), z) != table.product(x, table.product(y, z))) {
      fail("associativity fails at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
           std::to_string(z) + ")");
    }
  };
  if (n <= 32) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

GroupTable aff_group_table(const ff::FieldRef& field) {
  const auto group = enumerate_group(field);
  const std::uint64_t q = field->order();
  // enumerate_group is a-major over nonzero a, so the position of (a, b) is
  // (rank of a among nonzero indices) * q + index(b).
  const std::uint64_t zero_index = ff::FqElem::zero(field).index();
  auto position = [&](const AffElem& x) {
    std::uint64_t ai = x.a().index();
    if (ai > zero_index) --ai;
    return static_cast<std::uint32_t>(ai * q + x.b().index());
  };
  GroupTable table;
  table.order = group.size();
  table.identity = position(AffElem::identity(field));
  table.mul.resize(table.order * table.order);
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) table.mul[i * table.order + j] = position(group[i] * group[j]);
  }
  return table;
}

GroupTable cyclic_group_table(std::size_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  GroupTable table;
  table.order = order;
  table.identity = 0;
  table.mul.resize(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) table.mul[x * order + y] = static_cast<std::uint32_t>((x + y) % order);
  return table;
}

Integer count_group_generic(const GroupTable& table, unsigned genus, const CountOptions& options) {
  check_genus(genus);
  const unsigned slots = 2 * genus;
  check_budget(table.order, slots, options.guard, "generic enumeration");
  validate_group_table(table);

  const std::size_t n = table.order;
  std::vector<std::uint32_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table.product(x, y) == table.identity) {
        inv[x] = static_cast<std::uint32_t>(y);
        break;
      }
    }
  }
  auto comm = [&](std::size_t x, std::size_t y) {
    return table.product(table.product(table.product(x, y), inv[x]), inv[y]);
  };

  const auto solutions = detail::parallel_reduce<std::uint64_t>(
      n, options.threads, 0, [&](std::uint64_t first_lo, std::uint64_t first_hi) {
        std::uint64_t local = 0;
        if (first_lo >= first_hi) return local;
        std::vector<std::size_t> digit(slots, 0);
        std::vector<std::size_t> prefix(genus + 1, table.identity);
        digit[0] = first_lo;
        auto refresh_from = [&](unsigned pair) {
          for (unsigned k = pair; k < genus; ++k) {
            prefix[k + 1] = table.product(prefix[k], comm(digit[2 * k], digit[2 * k + 1]));
          }
        };
        refresh_from(0);
        while (true) {
          if (prefix[genus] == table.identity) ++local;
          unsigned pos = slots;
          while (pos-- > 0) {
            if (++digit[pos] < (pos == 0 ? first_hi : n)) break;
            if (pos == 0) return local;
            digit[pos] = 0;
          }
          refresh_from(pos / 2);
        }
      });
  return Integer(std::to_string(solutions));
}

}  // namespace affrep::count
