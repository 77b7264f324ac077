#include "kirby/braidclasp.hpp"

#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace kirby {

namespace {

void check_letters(const std::vector<int>& letters, std::size_t bound, const char* what) {
  for (int l : letters) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > bound) {
      throw KirbyError(std::string(what) + " letter " + std::to_string(l) + " out of range");
    }
  }
}

void check_same(const FreeWord& a, const FreeWord& b) {
  if (a.generators() != b.generators()) throw KirbyError("free words over different generator counts");
}

std::vector<int> inverse_letters(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Header token plus signed integers, shared by the braid and free formats.
std::pair<std::size_t, std::vector<int>> parse_letters(std::istream& in, const std::string& header,
                                                       const std::string& key) {
  const auto lines = detail::content_lines(in);
  const std::string usage = header + " " + key + "=<int>";
  if (lines.empty()) throw KirbyError("missing header '" + usage + "'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != header) detail::fail_at(head, "expected header '" + usage + "'");
  std::size_t count = 0;
  std::vector<int> letters;
  try {
    count = detail::kv_count(head.tokens[1], key);
  } catch (const KirbyError& e) {
    detail::fail_at(head, e.what());
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    for (const auto& t : lines[k].tokens) {
      try {
        letters.push_back(static_cast<int>(detail::to_long(detail::parse_integer(t, "letter"), "letter")));
      } catch (const KirbyError& e) {
        detail::fail_at(lines[k], e.what());
      }
    }
  }
  return {count, letters};
}

std::string format_letters(const std::string& head, const std::vector<int>& letters) {
  std::string out = head + "\n";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters[k]);
  }
  if (!letters.empty()) out += '\n';
  return out;
}

}  // namespace

FreeWord::FreeWord(std::size_t generators, std::vector<int> letters) : n_(generators), letters_(std::move(letters)) {
  check_letters(letters_, n_, "free word");
}

FreeWord FreeWord::generator(std::size_t generators, int letter) { return FreeWord(generators, {letter}); }

FreeWord FreeWord::inverse() const { return FreeWord(n_, inverse_letters(letters_)); }

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  check_same(a, b);
  std::vector<int> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return FreeWord(a.generators(), std::move(out));
}

FreeWord free_reduce(const FreeWord& w) {
  std::vector<int> stack;
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(w.generators(), std::move(stack));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return free_reduce(a * b * a.inverse() * b.inverse());
}

FreeWord conjugate(const FreeWord& a, const FreeWord& g, Conjugation convention) {
  check_same(a, g);
  if (convention == Conjugation::InverseLeft) return free_reduce(g.inverse() * a * g);
  return free_reduce(g * a * g.inverse());
}

FreeWord witt_hall_product(const FreeWord& x, const FreeWord& y, const FreeWord& z, Conjugation convention) {
  const FreeWord f1 = conjugate(commutator(z, commutator(y.inverse(), x)), y.inverse(), convention);
  const FreeWord f2 = conjugate(commutator(y, commutator(x.inverse(), z)), x.inverse(), convention);
  const FreeWord f3 = conjugate(commutator(x, commutator(z.inverse(), y)), z.inverse(), convention);
  return free_reduce(f1 * f2 * f3);
}

bool verify_witt_hall(Conjugation convention) {
  const auto x = FreeWord::generator(3, 1);
  const auto y = FreeWord::generator(3, 2);
  const auto z = FreeWord::generator(3, 3);
  return witt_hall_product(x, y, z, convention).empty();
}

// ---------------------------------------------------------------------------

FreeAutomorphism FreeAutomorphism::identity(std::size_t n) {
  std::vector<FreeWord> images;
  for (std::size_t k = 1; k <= n; ++k) images.push_back(FreeWord::generator(n, static_cast<int>(k)));
  return FreeAutomorphism(std::move(images));
}

FreeAutomorphism::FreeAutomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (auto& w : images_) {
    if (w.generators() != images_.size()) throw KirbyError("automorphism images over the wrong generator count");
    w = free_reduce(w);
  }
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  if (w.generators() != generators()) throw KirbyError("word over the wrong generator count");
  std::vector<int> out;
  for (int l : w.letters()) {
    const auto& img = images_[static_cast<std::size_t>(std::abs(l)) - 1].letters();
    for (int m : (l > 0 ? img : inverse_letters(img))) {
      if (!out.empty() && out.back() == -m) {
        out.pop_back();
      } else {
        out.push_back(m);
      }
    }
  }
  return FreeWord(generators(), std::move(out));
}

bool FreeAutomorphism::is_identity() const { return *this == identity(generators()); }

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  if (f.generators() != g.generators()) throw KirbyError("composing automorphisms of different free groups");
  std::vector<FreeWord> images;
  for (const auto& w : g.images()) images.push_back(f.apply(w));
  return FreeAutomorphism(std::move(images));
}

// ---------------------------------------------------------------------------

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters) : s_(strands), letters_(std::move(letters)) {
  if (s_ == 0) throw KirbyError("a braid needs at least one strand");
  check_letters(letters_, s_ - 1, "braid");
}

BraidWord BraidWord::inverse() const { return BraidWord(s_, inverse_letters(letters_)); }

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(s_);
  for (int t = 0; t < std::abs(k); ++t) out = out * base;
  return out;
}

BraidWord operator*(const BraidWord& b, const BraidWord& bp) {
  if (b.strands() != bp.strands()) throw KirbyError("stacking braids with different strand counts");
  std::vector<int> out = b.letters();
  out.insert(out.end(), bp.letters().begin(), bp.letters().end());
  return BraidWord(b.strands(), std::move(out));
}

FreeAutomorphism artin_action(const BraidWord& b) {
  const std::size_t n = b.strands();
  auto acc = FreeAutomorphism::identity(n);
  for (int l : b.letters()) {
    // acc <- acc o sigma_i^{+-1}; only two generator images move.
    const int i = std::abs(l);
    std::vector<FreeWord> images = acc.images();
    const FreeWord xi = images[i - 1];
    const FreeWord xj = images[i];
    if (l > 0) {
      images[i - 1] = free_reduce(xi * xj * xi.inverse());
      images[i] = xi;
    } else {
      images[i - 1] = xj;
      images[i] = free_reduce(xj.inverse() * xi * xj);
    }
    acc = FreeAutomorphism(std::move(images));
  }
  return acc;
}

bool braid_is_trivial(const BraidWord& b) { return artin_action(b).is_identity(); }

std::vector<std::size_t> induced_permutation(const BraidWord& b) {
  // pos[k] = current position of the strand that started at k+1.
  std::vector<std::size_t> pos(b.strands());
  std::iota(pos.begin(), pos.end(), 1);
  for (int l : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l));
    for (auto& p : pos) {
      if (p == i) {
        p = i + 1;
      } else if (p == i + 1) {
        p = i;
      }
    }
  }
  return pos;
}

bool is_pure(const BraidWord& b) {
  const auto p = induced_permutation(b);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != k + 1) return false;
  return true;
}

BraidWord pure_braid_generator(std::size_t i, std::size_t j, std::size_t strands) {
  if (i < 1 || i >= j || j > strands) throw KirbyError("pure braid generator needs 1 <= i < j <= s");
  std::vector<int> w;
  for (std::size_t k = j - 1; k > i; --k) w.push_back(static_cast<int>(k));
  w.push_back(static_cast<int>(i));
  w.push_back(static_cast<int>(i));
  for (std::size_t k = i + 1; k < j; ++k) w.push_back(-static_cast<int>(k));
  return BraidWord(strands, std::move(w));
}

BraidWord substitute(const FreeWord& w, const std::vector<BraidWord>& braids) {
  if (braids.size() != w.generators()) throw KirbyError("need one braid per free generator");
  if (braids.empty()) throw KirbyError("no braids to substitute");
  BraidWord out(braids.front().strands());
  for (int l : w.letters()) {
    const auto& b = braids[static_cast<std::size_t>(std::abs(l)) - 1];
    out = out * (l > 0 ? b : b.inverse());
  }
  return out;
}

bool verify_ihx_braid_identity(const BraidWord& beta1, const BraidWord& alpha) {
  if (beta1.strands() != 4 || alpha.strands() != 4) throw KirbyError("IHX braids live on 4 strands");
  const BraidWord b2 = alpha.power(2) * beta1 * alpha.power(-2);
  const BraidWord b3 = alpha * beta1 * alpha.inverse();
  return braid_is_trivial(beta1 * b2 * b3);
}

// ---------------------------------------------------------------------------

BraidWord parse_braid_word(std::istream& in) {
  auto [s, letters] = parse_letters(in, "braid", "s");
  return BraidWord(s, std::move(letters));
}

BraidWord parse_braid_word(const std::string& text) {
  std::istringstream in(text);
  return parse_braid_word(in);
}

std::string format_braid_word(const BraidWord& b) {
  return format_letters("braid s=" + std::to_string(b.strands()), b.letters());
}

FreeWord parse_free_word(std::istream& in) {
  auto [n, letters] = parse_letters(in, "free", "n");
  return FreeWord(n, std::move(letters));
}

FreeWord parse_free_word(const std::string& text) {
  std::istringstream in(text);
  return parse_free_word(in);
}

std::string format_free_word(const FreeWord& w) {
  return format_letters("free n=" + std::to_string(w.generators()), w.letters());
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace kirby
