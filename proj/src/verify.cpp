#include "belyi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "belyi/covering.hpp"
#include "belyi/homology.hpp"
#include "belyi/modsym.hpp"
#include "belyi/words.hpp"

namespace belyi {

const std::vector<std::string>& library_operations() {
  static const std::vector<std::string> ops{
      "validate",         "s_set",           "fermat_auto_image", "gluing_table",
      "lift_boundary_loop", "free_reduce",   "strip_placeholders", "between",
      "magnus_class",     "closed_form_delta", "expand_T",        "t_decomposition",
      "eps_h1",           "eps_wedge",       "substitute",        "general_inertia_delta",
      "fermat_image",     "pfaffian_check",  "coset_of",          "reduce_symbols",
      "boundary",         "is_cycle",        "rho_to_E"};
  return ops;
}

const std::vector<std::string>& pair_properties() {
  static const std::vector<std::string> props{
      "params",          "fermat_auto_image", "gluing",        "lift_vs_formula",
      "word_shape",      "three_routes",      "pfaffian",      "t_decomposition",
      "corollary",       "expand_T",          "eps_invariance", "between",
      "fermat_image",    "substitute",        "general_inertia", "modsym"};
  return props;
}

bool VerifyReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairResult& r) { return !r.failure; }) &&
         substitution_sign != 0;
}

std::optional<PropertyFailure> VerifyReport::first_failure() const {
  for (const PairResult& r : pairs) {
    if (r.failure) return r.failure;
  }
  return std::nullopt;
}

std::vector<CorollaryClause> corollary_clauses(const CurveParams& p) {
  const Integer n = p.n();
  const Integer k = p.k();
  const Integer half = (n - 1) / 2;
  std::vector<CorollaryClause> out;
  auto make = [&](std::string name, const std::function<Integer(Integer)>& t) {
    CorollaryClause c{std::move(name), {}};
    for (Integer r = 1; r <= half; ++r) c.coefficients.push_back(t(r));
    out.push_back(std::move(c));
  };
  auto unit = [](Integer r, Integer at) -> Integer { return r == at ? 1 : 0; };

  if (k == 1) make("k=1", [](Integer r) { return r % 2 == 0 ? 1 : -1; });
  if (k == 2) {
    make("k=2", [n](Integer r) -> Integer {
      if (r % 3 == 0) return 1;
      return r % 3 == n % 3 ? -1 : 0;
    });
  }
  if (k == n - 2) make("k=n-2", [&](Integer r) { return -unit(r, 1); });
  if (k == n - 3) make("k=n-3", [](Integer r) -> Integer { return r < 2 ? 0 : (r % 2 == 0 ? -1 : 1); });
  if (2 * k == n - 1) make("k=(n-1)/2", [&](Integer r) { return -unit(r, half); });
  if (2 * k == n - 3) make("k=(n-3)/2", [&](Integer r) { return unit(r, half) - unit(r, 1); });
  if (n % 3 == 2 && 3 * k == n - 2) {
    make("k=(n-2)/3", [&](Integer r) { return unit(r, k + 1) - unit(r, k); });
  }
  if (n % 3 == 1 && 3 * k == 2 * n - 2) {
    make("k=(2n-2)/3", [&](Integer r) { return unit(r, (k + 2) / 2) - unit(r, k / 2); });
  }
  return out;
}

Integer substitution_remark_sign() {
  const CurveParams p = validate(5, 2);
  WedgeClass literal(5);
  literal.add(1, 2, -1);
  literal.add(2, 3, -1);
  literal.add(3, 4, -1);
  const WedgeClass relabeled = substitute(p, literal, p.residue(3));
  const WedgeClass delta = closed_form_delta(p);
  if (relabeled == delta) return 1;
  if (relabeled == -delta) return -1;
  return 0;
}

namespace {

struct CheckFailed {
  std::string detail;
};

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

[[noreturn]] void fail(const std::string& detail) { throw CheckFailed{detail}; }

void require(bool condition, const char* detail) {
  if (!condition) fail(detail);
}

void require(bool condition, const std::string& detail) {
  if (!condition) fail(detail);
}

class PairChecker {
 public:
  PairChecker(const CurveParams& p, const VerifyOptions& options, PairResult& result)
      : p_(p), options_(options), result_(result), n_(p.n()), k_(p.k()) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(k_)};
    rng_.seed(seq);
  }

  void run() {
    const std::vector<std::pair<std::string, void (PairChecker::*)()>> checks{
        {"params", &PairChecker::check_params},
        {"fermat_auto_image", &PairChecker::check_fermat_auto_image},
        {"gluing", &PairChecker::check_gluing},
        {"lift_vs_formula", &PairChecker::check_lift},
        {"word_shape", &PairChecker::check_word_shape},
        {"three_routes", &PairChecker::check_three_routes},
        {"pfaffian", &PairChecker::check_pfaffian},
        {"t_decomposition", &PairChecker::check_t_decomposition},
        {"corollary", &PairChecker::check_corollary},
        {"expand_T", &PairChecker::check_expand_T},
        {"eps_invariance", &PairChecker::check_eps_invariance},
        {"between", &PairChecker::check_between},
        {"fermat_image", &PairChecker::check_fermat_image},
        {"substitute", &PairChecker::check_substitute},
        {"general_inertia", &PairChecker::check_general_inertia},
        {"modsym", &PairChecker::check_modsym},
    };
    for (const auto& [name, fn] : checks) {
      try {
        (this->*fn)();
      } catch (const CheckFailed& f) {
        result_.failure = PropertyFailure{n_, k_, name, f.detail};
        return;
      } catch (const std::exception& e) {
        result_.failure = PropertyFailure{n_, k_, name, std::string("exception: ") + e.what()};
        return;
      }
      result_.passed.push_back(name);
    }
  }

 private:
  void touch(const char* op) { result_.operations.insert(op); }

  const WedgeClass& delta() {
    if (!delta_) {
      touch("closed_form_delta");
      delta_ = closed_form_delta(p_);
    }
    return *delta_;
  }

  const Word& loop() {
    if (!loop_) {
      touch("lift_boundary_loop");
      loop_ = lift_boundary_loop(p_).word;
    }
    return *loop_;
  }

  void check_params() {
    touch("validate");
    const CurveParams again = validate(n_, k_);
    require(again == p_, "validate is not reproducible");
    require(mod(p_.c() * (k_ + 1), n_) == 1, "c(k+1) != 1 mod n");
    require(p_.genus() == (n_ - 1) / 2, "genus");
    const auto& in = p_.inertia();
    require((in[0] + in[1] + in[2]).value() == 0, "inertia does not sum to 0");
    touch("s_set");
    auto s = s_set(p_);
    require(static_cast<Integer>(s.size()) == p_.c() - 1, "|S| != c-1");
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), "S has repeated residues");
  }

  void check_fermat_auto_image() {
    touch("fermat_auto_image");
    const Residue e0 = fermat_auto_image(p_, p_.residue(1), p_.residue(0));
    const Residue e1 = fermat_auto_image(p_, p_.residue(0), p_.residue(1));
    require(e0.value() == 1, "eps_0 must descend to eps");
    require(fermat_auto_image(p_, p_.residue(1), p_.residue(-p_.k_inverse())).value() == 0,
            "h = eps_0 eps_1^{-1/k} must act trivially");
    const Integer stride = n_ <= 31 ? 1 : 7;
    for (Integer i = 0; i < n_; i += stride) {
      for (Integer j = 0; j < n_; ++j) {
        const Residue img = fermat_auto_image(p_, p_.residue(i), p_.residue(j));
        require(img == i * e0 + j * e1, "not a homomorphism at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
        // kernel is generated by (1, -k^{-1})
        require((img.value() == 0) == (mod(j + i * p_.k_inverse(), n_) == 0), "kernel mismatch");
      }
    }
  }

  void check_gluing() {
    touch("gluing_table");
    const GluingTable t = gluing_table(p_);
    for (Integer i = 0; i < n_; ++i) {
      const Residue s = p_.residue(i);
      require(t.target(s, EdgeKind::Tau) == s - 1, "tau gluing");
      require(t.target(s, EdgeKind::Alpha) == s - (k_ + 1), "alpha gluing");
      require(t.target(s, EdgeKind::Xi) == s, "xi gluing");
    }
  }

  void check_lift() {
    touch("lift_boundary_loop");
    const BoundaryLoop lifted = lift_boundary_loop(p_);
    const Word formula = boundary_loop_formula(p_);
    if (lifted.word != formula) {
      fail("simulated L " + to_string(lifted.word) + " != formula " + to_string(formula));
    }
    require(static_cast<Integer>(lifted.log.revolutions.size()) == n_, "revolution count");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Integer j = 0; j < n_; ++j) {
      const Revolution& rev = lifted.log.revolutions[static_cast<std::size_t>(j)];
      require(rev.start.value() == mod(j * (n_ - k_ - 1), n_), "sheet sequence");
      require(rev.next == rev.start - (k_ + 1), "next sheet");
      require(!seen[static_cast<std::size_t>(rev.start.value())], "sheet visited twice");
      seen[static_cast<std::size_t>(rev.start.value())] = true;
    }
    require(lifted.log.revolutions.back().next.value() == 0, "loop does not close on R_0");
    Integer alpha = 0, xi = 0;
    for (const Cancellation& c : lifted.log.cancellations) {
      (c.first.kind == EdgeKind::Alpha ? alpha : xi) += 1;
      require(c.first.kind != EdgeKind::Tau, "a tau edge cancelled");
    }
    require(alpha == n_ && xi == n_, "expected n alpha and n xi cancellations");
    loop_ = lifted.word;
  }

  void check_word_shape() {
    const Word& w = loop();
    require(static_cast<Integer>(w.size()) == 2 * n_, "L must have 2n letters");
    std::vector<int> pos(static_cast<std::size_t>(n_), 0), neg(static_cast<std::size_t>(n_), 0);
    for (const Letter& l : w.letters()) (l.sign > 0 ? pos : neg)[static_cast<std::size_t>(l.index)]++;
    for (Integer i = 0; i < n_; ++i) {
      require(pos[static_cast<std::size_t>(i)] == 1 && neg[static_cast<std::size_t>(i)] == 1,
              "generator " + std::to_string(i) + " multiplicity");
    }
    require(w.exponent_sums().isZero(), "abelianization of L is nonzero");
    touch("free_reduce");
    const Word reduced = free_reduce(w);
    require(free_reduce(reduced) == reduced, "free_reduce not idempotent");
    touch("strip_placeholders");
    const Word stripped = strip_placeholders(w);
    require(static_cast<Integer>(stripped.size()) == 2 * n_ - 2, "placeholder count");
    touch("magnus_class");
    require(magnus_class(stripped) == magnus_class(free_reduce(stripped)),
            "Magnus class changes under free reduction");
    const DegreeTwoExpansion e = magnus_expansion(w);
    require(e.quadratic == -e.quadratic.transpose(), "quadratic part of L not antisymmetric");
  }

  void check_three_routes() {
    const WedgeClass& closed = delta();
    touch("magnus_class");
    const WedgeClass magnus = magnus_class(loop().inverse());
    const WedgeClass ordering = -ordering_rule_class(loop());
    if (closed != magnus) fail("closed form " + show(closed) + " != Magnus " + show(magnus));
    if (closed != ordering) fail("closed form " + show(closed) + " != ordering rule " + show(ordering));
  }

  void check_pfaffian() {
    touch("pfaffian_check");
    const Integer det = pfaffian_check(p_, delta());
    require(det == 1, "det = " + std::to_string(det));
  }

  void check_t_decomposition() {
    touch("t_decomposition");
    const TDecomposition t = t_decomposition(p_);
    require(static_cast<Integer>(t.coefficients.size()) == (n_ - 1) / 2, "size");
    require(recompose(p_, t) == delta(), "recomposition differs from Delta");
    for (Integer r = 1; r < n_; ++r) {
      const Integer tr = plus_indicator(p_, r) - minus_indicator(p_, r);
      const Integer reflected = plus_indicator(p_, n_ - r) - minus_indicator(p_, n_ - r);
      require(reflected == -tr, "reflection rule at r=" + std::to_string(r));
    }
  }

  void check_corollary() {
    if (n_ > options_.corollary_max_n) return;
    const TDecomposition t = t_decomposition(p_);
    for (const CorollaryClause& clause : corollary_clauses(p_)) {
      require(clause.coefficients == t.coefficients, "clause " + clause.name + " mismatch");
      result_.corollary_clauses.push_back(clause.name);
    }
  }

  void check_expand_T() {
    touch("expand_T");
    for (Integer r = 1; r < n_; ++r) {
      require(expand_T(p_, n_ - r) == -expand_T(p_, r), "T_{n-r} != -T_r at r=" + std::to_string(r));
    }
  }

  void check_eps_invariance() {
    touch("eps_wedge");
    for (Integer r = 1; r <= (n_ - 1) / 2; ++r) {
      const WedgeClass t = expand_T(p_, r);
      require(eps_wedge(p_, t) == t, "eps does not fix T_" + std::to_string(r));
    }
    require(eps_wedge(p_, delta()) == delta(), "eps does not fix Delta");

    // multiplicative order exactly n, checked on basis vectors via eps_h1
    touch("eps_h1");
    IntMatrix power = IntMatrix::Identity(n_ - 1, n_ - 1);
    for (Integer e = 1; e <= n_; ++e) {
      power = apply_epsilon(p_, power);
      const bool identity = power == IntMatrix::Identity(n_ - 1, n_ - 1);
      require(identity == (e == n_), "eps^" + std::to_string(e) + (identity ? " is" : " is not") +
                                         " the identity");
    }
    H1Class v = H1Class::basis(n_, 1);
    for (Integer e = 0; e < n_; ++e) v = eps_h1(p_, v);
    require(v == H1Class::basis(n_, 1), "eps_h1^n [E_1] != [E_1]");
  }

  void check_between() {
    touch("between");
    const Word& w = loop();
    const Integer step = n_ - k_ - 1;
    for (Integer i = 0; i < n_; ++i) {
      const auto got = between(w, p_.residue(i));
      std::vector<Letter> expected;
      for (Integer j = 1; j <= p_.c() - 1; ++j) {
        expected.push_back({mod(i + j * step + 1, n_), 1});
        expected.push_back({mod(i + j * step, n_), -1});
      }
      require(got == expected, "between(L, " + std::to_string(i) + ") mismatch");
    }
  }

  void check_fermat_image() {
    touch("fermat_image");
    const Integer stride = n_ <= 31 ? 1 : 5;
    for (Integer i = 0; i < n_; i += stride) {
      for (Integer j = 0; j < n_; j += stride) {
        const H1Class img = fermat_image(p_, p_.residue(i), p_.residue(j));
        // abelianize the loop E_{jk} E_{i+jk}^{-1} E_i directly
        const Integer jk = mod(j * k_, n_);
        const Word loopw(n_, {{jk, 1}, {i + jk, -1}, {i, 1}});
        const IntVector sums = loopw.exponent_sums();
        require(img.coords() == sums.tail(n_ - 1), "Fermat image disagrees with abelianization");
        if (i == 0 || j == 0) require(img.is_zero(), "E_{i,0} and E_{0,j} must map to 0");
      }
    }
  }

  std::vector<Integer> units() const {
    std::vector<Integer> out;
    for (Integer j = 1; j < n_; ++j) {
      if (gcd(j, n_) == 1 && (n_ <= 31 || j <= 3 || j == n_ - 1)) out.push_back(j);
    }
    return out;
  }

  void check_substitute() {
    touch("substitute");
    const WedgeClass& d = delta();
    const auto us = units();
    for (Integer a : us) {
      const WedgeClass da = substitute(p_, d, p_.residue(a));
      require(pfaffian_check(p_, da) == 1, "substitution by " + std::to_string(a) + " breaks unimodularity");
      const Integer a_inv = p_.residue(a).inverse().value();
      require(substitute(p_, da, p_.residue(a_inv)) == d, "inverse relabeling");
      const Integer b = us[static_cast<std::size_t>(a) % us.size()];
      require(substitute(p_, da, p_.residue(b)) == substitute(p_, d, p_.residue(a * b)),
              "relabeling is not multiplicative");
    }
    require(substitute(p_, d, p_.residue(1)) == d, "identity relabeling");
  }

  void check_general_inertia() {
    touch("general_inertia_delta");
    for (Integer j : units()) {
      const InertiaType t(n_, j, j * k_, -j * (k_ + 1));
      const WedgeClass g = general_inertia_delta(p_, t);
      require(substitute(p_, g, p_.residue(j)) == delta(),
              "relabeling the inertia-(j, jk, -j(k+1)) element by j does not give Delta");
    }
  }

  void check_modsym() {
    touch("reduce_symbols");
    touch("boundary");
    touch("is_cycle");
    touch("rho_to_E");
    touch("coset_of");

    // boundary and basis
    for (Integer r = 1; r < n_; ++r) {
      const SymbolCombination rho = SymbolCombination::rho(p_, r);
      require(boundary(p_, rho).is_zero(), "boundary(rho_" + std::to_string(r) + ") != 0");
      require(is_cycle(p_, rho), "rho_r not a cycle");
      require(rho_to_E(p_, rho) == H1Class::basis(n_, r), "rho_r != [E_r]");
    }
    require(!is_cycle(p_, SymbolCombination::tau_symbol(p_, 0)), "[tau] reported as a cycle");
    require(cycle_rank(p_) == n_ - 1, "cycle lattice rank != n-1");

    // reduction of [A^r]
    SymbolCombination all = SymbolCombination::zero(p_);
    for (Integer r = 0; r < n_; ++r) {
      const SymbolCombination red = reduce_symbols(p_, SymbolCombination::plain_symbol(p_, r));
      require(red.is_reduced(), "reduce_symbols left [A^r] terms");
      require(red.tau.sum() == 0, "reduced [A^" + std::to_string(r) + "] has nonzero coefficient sum");
      require(reduce_symbols(p_, red) == red, "reduce_symbols not idempotent");
      all += (r + 1) * SymbolCombination::plain_symbol(p_, r);
    }
    require(reduce_plain_symbol(p_, n_).isZero(), "[A^n] does not reduce to 0");
    {
      SymbolCombination expect = SymbolCombination::zero(p_);
      for (Integer r = 0; r < n_; ++r) {
        expect += (r + 1) * reduce_symbols(p_, SymbolCombination::plain_symbol(p_, r));
      }
      require(reduce_symbols(p_, all) == expect, "reduce_symbols not linear");
    }

    // cosets: Phi_k generators fix the coset
    const auto gens = phi_generators(p_);
    for (const GammaWord& g : gens) {
      require(coset_of(p_, g).value() == 0, "Phi_k generator " + to_string(g) + " not in Phi_k");
    }

    if (n_ > options_.modsym_max_n) return;

    // rho <-> E intertwines the A-shift with eps
    for (Integer r = 1; r < n_; ++r) {
      const SymbolCombination shifted = shift_symbols(p_, SymbolCombination::rho(p_, r), 1);
      require(rho_to_E(p_, shifted) == eps_h1(p_, H1Class::basis(n_, r)),
              "A-shift of rho_" + std::to_string(r) + " != eps([E_r])");
    }

    // shift law: Phi A^r B^s = Phi A^{r+m} B^{s - m k^{-1}}
    const Integer kinv = p_.k_inverse();
    for (Integer r = 0; r < n_; ++r) {
      for (Integer s = 0; s < n_; ++s) {
        const GammaWord base =
            GammaWord::power(GammaGenerator::A, r) * GammaWord::power(GammaGenerator::B, s);
        const Coset c = coset_of(p_, base);
        require(c == p_.residue(r + k_ * s), "coset formula r + ks");
        for (Integer m = 1; m < n_; ++m) {
          const GammaWord moved = GammaWord::power(GammaGenerator::A, r + m) *
                                  GammaWord::power(GammaGenerator::B, mod(s - m * kinv, n_));
          require(coset_of(p_, moved) == c, "shift law fails");
        }
      }
    }

    // fuzz: random words times random Phi_k elements on either side
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> coin(0, 3);
    auto random_word = [&] {
      GammaWord w;
      const int l = len(rng_);
      for (int i = 0; i < l; ++i) {
        const int c = coin(rng_);
        w.letters.push_back({c < 2 ? GammaGenerator::A : GammaGenerator::B, (c % 2) ? -1 : 1});
      }
      return w;
    };
    std::uniform_int_distribution<std::size_t> pick(0, gens.size());
    auto random_phi_element = [&] {
      GammaWord phi;
      for (int i = 0; i < 3; ++i) {
        const std::size_t choice = pick(rng_);
        if (choice == gens.size()) {
          const GammaWord x = random_word(), y = random_word();
          phi *= x * y * x.inverse() * y.inverse();
        } else {
          phi *= coin(rng_) % 2 ? gens[choice] : gens[choice].inverse();
        }
      }
      return phi;
    };
    for (Integer i = 0; i < options_.fuzz_words; ++i) {
      const GammaWord w = random_word();
      const GammaWord phi = random_phi_element();
      const Coset c = coset_of(p_, w);
      if (coset_of(p_, phi * w) != c) {
        fail("coset changed under left multiplication by Phi_k: " + to_string(phi) + " * " + to_string(w));
      }
      require(coset_of(p_, w * phi) == c, "coset changed when appending a Phi_k element");
    }
    result_.fuzzed_words = options_.fuzz_words;
  }

  const CurveParams& p_;
  const VerifyOptions& options_;
  PairResult& result_;
  Integer n_;
  Integer k_;
  std::mt19937_64 rng_;
  std::optional<WedgeClass> delta_;
  std::optional<Word> loop_;
};

}  // namespace

PairResult verify_pair(const CurveParams& p, const VerifyOptions& options) {
  PairResult result{p.n(), p.k(), {}, std::nullopt, {}, {}, 0};
  PairChecker(p, options, result).run();
  return result;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n < 3) {
    throw RangeError("verify needs max_n >= 3, got " + std::to_string(options.max_n));
  }
  const std::vector<CurveParams> pairs = valid_pairs(options.max_n);
  VerifyReport report;
  report.pairs.resize(pairs.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      report.pairs[i] = verify_pair(pairs[i], options);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const PairResult& r : report.pairs) {
    report.operations.insert(r.operations.begin(), r.operations.end());
    for (const auto& clause : r.corollary_clauses) report.corollary_counts[clause]++;
  }
  report.substitution_sign = substitution_remark_sign();
  return report;
}

}  // namespace belyi
