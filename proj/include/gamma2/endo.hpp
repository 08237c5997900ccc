#pragma once

// Substitution endomorphisms of the free group: each generator is mapped to
// an image word, letters substitute homomorphically, results stay reduced.

#include <vector>

#include "gamma2/word.hpp"

namespace gamma2 {

struct SubstEndo {
  int genus = 0;
  std::vector<Word> images;  // images[i-1] = image of gamma_i

  const Word& image(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
  bool operator==(const SubstEndo&) const = default;
};

inline SubstEndo identity_endo(int g) {
  SubstEndo e{g, {}};
  for (int i = 1; i <= g; ++i) e.images.push_back(gen(g, i));
  return e;
}

inline Word apply(const SubstEndo& e, const Word& w) {
  detail::require(e.genus == w.genus, "apply: genus mismatch");
  Word out{w.genus, {}};
  for (int l : w.letters) {
    const Word& img = e.image(l < 0 ? -l : l);
    if (l > 0) {
      for (int x : img.letters) detail::push_reduced(out.letters, x);
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
        detail::push_reduced(out.letters, -*it);
    }
  }
  return out;
}

// apply(compose(e1, e2), w) == apply(e1, apply(e2, w)): e2 substitutes
// first, e1 outermost.
inline SubstEndo compose(const SubstEndo& e1, const SubstEndo& e2) {
  detail::require(e1.genus == e2.genus, "compose: genus mismatch");
  SubstEndo out{e1.genus, {}};
  out.images.reserve(e2.images.size());
  for (const Word& img : e2.images) out.images.push_back(apply(e1, img));
  return out;
}

inline Word cyclic_reduce(const Word& w) {
  Word out = w;
  while (out.letters.size() >= 2 &&
         out.letters.front() == -out.letters.back()) {
    out.letters.erase(out.letters.begin());
    out.letters.pop_back();
  }
  return out;
}

namespace detail {
inline bool is_rotation_of(const std::vector<int>& w, const std::vector<int>& r) {
  if (w.size() != r.size()) return false;
  if (w.empty()) return true;
  const std::size_t n = r.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k)
      match = w[k] == r[(s + k) % n];
    if (match) return true;
  }
  return false;
}
}  // namespace detail

// True iff the image of the boundary relator cyclically reduces to a
// rotation of the relator or of its inverse, i.e. the endomorphism descends
// to the surface group (strong, on-the-nose form of the check).
inline bool descends_to_pi(const SubstEndo& e) {
  const Word r = relator(e.genus);
  const Word img = cyclic_reduce(apply(e, r));
  return detail::is_rotation_of(img.letters, r.letters) ||
         detail::is_rotation_of(img.letters, invert(r).letters);
}

}  // namespace gamma2
