#include "bcells/kl_basis.hpp"

#include <algorithm>
#include <sstream>

#include "bcells/error.hpp"

namespace bcells {

namespace {

// Dense accumulator over the group with length buckets, so that reduction can
// walk the support from the top length down while new terms appear below.
class Scratch {
 public:
  explicit Scratch(const HeckeAlgebra& h) : h_(h), coeff_(h.size()), touched_(h.size(), 0) {
    int max_len = 0;
    for (std::size_t i = 0; i < h.size(); ++i) max_len = std::max(max_len, h.length(static_cast<ElementIndex>(i)));
    buckets_.resize(static_cast<std::size_t>(max_len) + 1);
  }

  LaurentPoly& at(ElementIndex y) {
    if (!touched_[y]) {
      touched_[y] = 1;
      buckets_[h_.length(y)].push_back(y);
    }
    return coeff_[y];
  }

  /// acc = C_s · C_x, where C_s = T_s + v^-L T_e.
  void load_cs_times(Generator s, const KLTable::Expansion& cx) {
    const int L = h_.weight().of(s);
    for (const auto& [y, c] : cx) {
      const auto sy = h_.left_mul(s, y);
      at(sy) += c;
      at(y) += c.shifted(h_.length(sy) < h_.length(y) ? L : -L);
    }
  }

  void subtract(const LaurentPoly& m, const KLTable::Expansion& cy) {
    for (const auto& [z, c] : cy) at(z).sub_product(m, c);
  }

  /// Strips every C_y (y ≠ top) whose T_y coefficient has a non-negative
  /// degree part; returns the subtracted multiples.
  template <class ExpansionOf>
  KLTable::Expansion reduce(ElementIndex top, ExpansionOf&& expansion_of) {
    KLTable::Expansion removed;
    for (std::size_t len = buckets_.size(); len-- > 0;) {
      auto& bucket = buckets_[len];
      std::sort(bucket.begin(), bucket.end());
      for (std::size_t k = 0; k < bucket.size(); ++k) {
        const auto y = bucket[k];
        if (y == top || coeff_[y].has_only_negative_degrees()) continue;
        auto m = coeff_[y].symmetric_completion();
        subtract(m, expansion_of(y));
        removed.emplace_back(y, std::move(m));
      }
    }
    std::sort(removed.begin(), removed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return removed;
  }

  KLTable::Expansion take() {
    KLTable::Expansion out;
    for (auto& bucket : buckets_) {
      for (auto y : bucket) {
        if (!coeff_[y].is_zero()) out.emplace_back(y, std::move(coeff_[y]));
        coeff_[y] = LaurentPoly{};
        touched_[y] = 0;
      }
      bucket.clear();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  const HeckeAlgebra& h_;
  std::vector<LaurentPoly> coeff_;
  std::vector<std::uint8_t> touched_;
  std::vector<std::vector<ElementIndex>> buckets_;
};

Generator pick_left_descent(const HeckeAlgebra& h, ElementIndex w, DescentChoice choice) {
  const int n = h.rank();
  if (choice == DescentChoice::Smallest) {
    for (int g = 0; g < n; ++g)
      if (h.has_left_descent(Generator{g}, w)) return Generator{g};
  } else {
    for (int g = n - 1; g >= 0; --g)
      if (h.has_left_descent(Generator{g}, w)) return Generator{g};
  }
  fail(Error::Kind::InvariantViolation, "non-identity element without a left descent");
}

}  // namespace

HeckeElt KLTable::c_element(ElementIndex w) const {
  HeckeElt h;
  for (const auto& [y, c] : c_[w]) h.terms.emplace(y, c);
  return h;
}

LaurentPoly KLTable::p(ElementIndex y, ElementIndex w) const {
  const auto& e = c_[w];
  auto it = std::lower_bound(e.begin(), e.end(), y, [](const auto& t, ElementIndex k) { return t.first < k; });
  return it != e.end() && it->first == y ? it->second : LaurentPoly{};
}

std::string KLTable::export_text() const {
  std::ostringstream out;
  const auto& g = algebra_->group();
  for (auto w : algebra_->length_order()) {
    for (const auto& [y, c] : c_[w]) out << g.at(y).to_string() << ' ' << g.at(w).to_string() << " : " << c.to_string() << '\n';
  }
  return out.str();
}

KLTable kl_basis(std::shared_ptr<const HeckeAlgebra> algebra, const KLOptions& options) {
  const auto& h = *algebra;
  const int n = h.rank();
  if (n > 5 || (n == 5 && !options.allow_rank5))
    fail(Error::Kind::Budget, "KL oracle budget is n <= 4 (n = 5 opt-in), got n = " + std::to_string(n));

  KLTable table;
  table.algebra_ = algebra;
  table.c_.resize(h.size());
  table.mu_.assign(static_cast<std::size_t>(n), std::vector<KLTable::Expansion>(h.size()));
  Scratch acc(h);
  auto expansion_of = [&](ElementIndex y) -> const KLTable::Expansion& { return table.c_[y]; };

  for (auto w : h.length_order()) {
    if (h.length(w) == 0) {
      table.c_[w] = {{w, LaurentPoly(1)}};
      continue;
    }
    const auto s = pick_left_descent(h, w, options.descent);
    const auto sw = h.left_mul(s, w);
    acc.load_cs_times(s, table.c_[sw]);
    for (const auto& [z, m] : acc.reduce(w, expansion_of))
      require_invariant(h.length(h.left_mul(s, z)) < h.length(z), "M-polynomial attached to z with sz > z");
    table.c_[w] = acc.take();
    require_invariant(table.p(w, w) == LaurentPoly(1), "C_w is not unitriangular");
    for (const auto& [y, c] : table.c_[w])
      require_invariant(y == w || c.has_only_negative_degrees(), "p_{y,w} has a non-negative degree term");
  }

  // C_s C_w for every s with sw > w: recovers all M^s_{z,w} and checks that the
  // residue is C_{sw}, i.e. that C_{sw} does not depend on the descent chosen.
  for (ElementIndex w = 0; w < h.size(); ++w) {
    for (int g = 0; g < n; ++g) {
      const Generator s{g};
      const auto sw = h.left_mul(s, w);
      acc.load_cs_times(s, table.c_[w]);
      if (h.length(sw) < h.length(w)) {
        auto prod = acc.take();
        if (options.verify_degenerate) {
          KLTable::Expansion expect;
          const auto q = LaurentPoly::v_plus_inverse(h.weight().of(s));
          for (const auto& [y, c] : table.c_[w]) expect.emplace_back(y, q * c);
          require_invariant(prod == expect, "C_s C_w != (v^L + v^-L) C_w for sw < w");
        }
        continue;
      }
      auto removed = acc.reduce(sw, expansion_of);
      for (const auto& [z, m] : removed) {
        require_invariant(h.length(h.left_mul(s, z)) < h.length(z), "M-polynomial attached to z with sz > z");
        require_invariant(m.is_bar_invariant(), "M-polynomial is not bar-invariant");
      }
      require_invariant(acc.take() == table.c_[sw], "C_{sw} depends on the choice of left descent");
      table.mu_[g][w] = std::move(removed);
    }
  }

  if (options.verify_bar) {
    for (ElementIndex w = 0; w < h.size(); ++w)
      require_invariant(h.bar(table.c_element(w)) == table.c_element(w), "C_w is not bar-invariant");
  }
  return table;
}

KLTable kl_basis(int n, WeightFunction weight, const KLOptions& options) {
  if (n > 5 || (n == 5 && !options.allow_rank5))
    fail(Error::Kind::Budget, "KL oracle budget is n <= 4 (n = 5 opt-in), got n = " + std::to_string(n));
  return kl_basis(std::make_shared<const HeckeAlgebra>(n, weight), options);
}

std::vector<KLEntry> parse_kl_export(std::string_view text) {
  std::vector<KLEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(" : ");
    if (colon == std::string::npos) fail(Error::Kind::Parse, "missing ' : ' in KL line '" + line + "'");
    std::istringstream head(line.substr(0, colon));
    std::string y, w, extra;
    if (!(head >> y >> w) || (head >> extra)) fail(Error::Kind::Parse, "expected 'y w' before ':' in '" + line + "'");
    out.push_back({SignedPerm::parse(y), SignedPerm::parse(w), LaurentPoly::parse(line.substr(colon + 3))});
  }
  return out;
}

}  // namespace bcells
