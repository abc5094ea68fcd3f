#include <array>
#include <set>
#include <stdexcept>

#include "dmg/words.hpp"

namespace dmg {

namespace {

// Coset table with union-find for coincidences.
class CosetTable {
 public:
  CosetTable(unsigned generators, std::size_t cap) : cols_(2 * generators), cap_(cap) { new_row(); }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) n += parent_[c] == c;
    return n;
  }
  std::size_t size() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }

  void define(std::size_t c, unsigned x) {
    const std::size_t n = new_row();
    at(c, x) = static_cast<long>(n);
    at(n, x ^ 1u) = static_cast<long>(c);
  }

  void scan_and_fill(std::size_t alpha, const std::vector<unsigned>& w) {
    if (w.empty()) return;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();  // unscanned part is w[i, j)
    for (;;) {
      while (i < j && at(f, w[i]) >= 0) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) >= 0) b = static_cast<std::size_t>(at(b, w[--j] ^ 1u));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<long>(b);
        at(b, w[i] ^ 1u) = static_cast<long>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(std::size_t c) {
    for (unsigned x = 0; x < cols_ && live(c); ++x)
      if (at(c, x) < 0) define(c, x);
  }

 private:
  std::size_t new_row() {
    if (parent_.size() >= cap_) {
      throw std::runtime_error("coset enumeration exceeded " + std::to_string(cap_) + " cosets");
    }
    table_.insert(table_.end(), cols_, -1);
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  long& at(std::size_t c, unsigned x) { return table_[c * cols_ + x]; }
  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }
  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }
  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t e = queue[qi];
      for (unsigned x = 0; x < cols_; ++x) {
        const long f = at(e, x);
        if (f < 0) continue;
        at(static_cast<std::size_t>(f), x ^ 1u) = -1;
        const std::size_t e1 = rep(e), f1 = rep(static_cast<std::size_t>(f));
        if (at(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(at(e1, x)), queue);
        } else if (at(f1, x ^ 1u) >= 0) {
          merge(e1, static_cast<std::size_t>(at(f1, x ^ 1u)), queue);
        } else {
          at(e1, x) = static_cast<long>(f1);
          at(f1, x ^ 1u) = static_cast<long>(e1);
        }
      }
    }
  }

  unsigned cols_;
  std::size_t cap_;
  std::vector<long> table_;
  std::vector<std::size_t> parent_;
};

std::vector<unsigned> to_letters(const FreeWord& w) {
  std::vector<unsigned> out;
  for (const Letter& l : w) out.push_back(2 * l.factor);  // involutions: x^-1 = x
  return out;
}

std::string ab_text(const FreeWord& w) {
  std::string s;
  for (const Letter& l : w) s += l.factor == 0 ? 'a' : 'b';
  return s.empty() ? "1" : s;
}

FreeWord ab_word(const CentralAmalgamDecl& d, std::string_view s) {
  std::vector<Letter> letters;
  for (char c : s) letters.push_back({c == 'a' ? 0u : 1u, std::uint64_t{1}});
  return word_reduce(d, letters);
}

}  // namespace

std::size_t subgroup_index(unsigned generators, const std::vector<std::vector<unsigned>>& relators,
                           const std::vector<std::vector<unsigned>>& subgroup, std::size_t cap) {
  for (const auto* set : {&relators, &subgroup})
    for (const auto& w : *set)
      for (unsigned x : w)
        if (x >= 2 * generators) throw std::invalid_argument("letter out of range in coset enumeration input");
  CosetTable t(generators, cap);
  for (const auto& w : subgroup) t.scan_and_fill(0, w);
  for (std::size_t alpha = 0; alpha < t.size(); ++alpha) {
    if (!t.live(alpha)) continue;
    for (const auto& rel : relators) {
      t.scan_and_fill(alpha, rel);
      if (!t.live(alpha)) break;
    }
    if (t.live(alpha)) t.fill_row(alpha);
  }
  return t.live_count();
}

nlohmann::ordered_json DihedralReport::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant;
  j["image_a"] = image_a;
  j["image_b"] = image_b;
  j["index"] = index;
  j["max_length"] = max_length;
  j["words_checked"] = words_checked;
  j["injective"] = injective;
  return j;
}

DihedralVariant parse_dihedral_variant(std::string_view s) {
  if (s == "partial") return DihedralVariant::PartialConjugation;
  if (s == "inner") return DihedralVariant::FullInner;
  if (s == "conj-a-by-b") return DihedralVariant::ConjugateAByB;
  throw std::invalid_argument("unknown dihedral variant '" + std::string(s) + "' (partial, inner, conj-a-by-b)");
}

DihedralReport dihedral_cohopf_demo(DihedralVariant v, int max_length) {
  if (max_length < 0 || max_length > 64) throw std::invalid_argument("max_length must be in [0, 64]");
  const CentralAmalgamDecl d("dinf", 2, {FactorDecl::cyclic("a", 2), FactorDecl::cyclic("b", 2)});
  DihedralReport rep;
  FreeWord ia, ib;
  switch (v) {
    case DihedralVariant::PartialConjugation:  // <a> conjugated by ab
      rep.variant = "partial";
      ia = ab_word(d, "ababa");
      ib = ab_word(d, "b");
      break;
    case DihedralVariant::FullInner:  // both factors conjugated by ab
      rep.variant = "inner";
      ia = ab_word(d, "ababa");
      ib = ab_word(d, "abbba");
      break;
    case DihedralVariant::ConjugateAByB:
      rep.variant = "conj-a-by-b";
      ia = ab_word(d, "bab");
      ib = ab_word(d, "b");
      break;
  }
  rep.image_a = ab_text(ia);
  rep.image_b = ab_text(ib);

  auto image = [&](const FreeWord& w) {
    std::vector<Letter> out;
    for (const Letter& l : w) {
      const FreeWord& img = l.factor == 0 ? ia : ib;
      out.insert(out.end(), img.begin(), img.end());
    }
    return word_reduce(d, out);
  };

  // Reduced words alternate a and b, so there are two of each positive length.
  std::set<std::string> images;
  std::size_t checked = 0;
  for (int len = 0; len <= max_length; ++len) {
    for (char first : {'a', 'b'}) {
      if (len == 0 && first == 'b') continue;
      std::string s;
      for (int k = 0; k < len; ++k) s += ((k % 2 == 0) == (first == 'a')) ? 'a' : 'b';
      images.insert(ab_text(image(ab_word(d, s))));
      ++checked;
    }
  }
  rep.max_length = max_length;
  rep.words_checked = checked;
  rep.injective = images.size() == checked;
  rep.index = subgroup_index(2, {{0, 0}, {2, 2}}, {to_letters(ia), to_letters(ib)});
  return rep;
}

}  // namespace dmg
