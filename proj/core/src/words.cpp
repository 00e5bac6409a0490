// Copyright 2026 The kpell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpell/words.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "kpell/error.hpp"
#include "kpell/seqs.hpp"

namespace kpell {
namespace {

void check_k(unsigned k) {
  if (k < 2 || k > kMaxK) throw DomainError("k must lie in [2, " + std::to_string(kMaxK) + "], got " + std::to_string(k));
}

std::uint64_t checked_budget(const BigInt& count, std::uint64_t budget, const char* what) {
  auto c = to_u64(count);
  if (!c || *c > budget) {
    if (c) throw BudgetError(what, *c, budget);
    throw BudgetError(what, count.str(), budget);
  }
  return *c;
}

}  // namespace

bool is_kpell(std::span<const Letter> letters, unsigned k) {
  std::size_t run = 0;
  for (Letter x : letters) {
    if (x > k) return false;
    if (x == k) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

bool is_fibonacci_string(std::span<const Letter> bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) return false;
    if (bits[i] == 1 && i + 1 < bits.size() && bits[i + 1] == 1) return false;
  }
  return true;
}

std::string render_word(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (x < 10) out.push_back(static_cast<char>('0' + x));
    else out += "(" + std::to_string(x) + ")";
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      out.push_back(static_cast<Letter>(c - '0'));
    } else if (c == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos || close == i + 1) throw DomainError("unterminated letter in \"" + std::string(text) + "\"");
      unsigned v = 0;
      for (std::size_t j = i + 1; j < close; ++j) {
        if (text[j] < '0' || text[j] > '9') throw DomainError("bad letter in \"" + std::string(text) + "\"");
        v = v * 10 + static_cast<unsigned>(text[j] - '0');
        if (v > 255) throw DomainError("letter too large in \"" + std::string(text) + "\"");
      }
      out.push_back(static_cast<Letter>(v));
      i = close;
    } else {
      throw DomainError("unexpected character in \"" + std::string(text) + "\"");
    }
  }
  return out;
}

KPellWord::KPellWord(std::vector<Letter> letters, unsigned k) : letters_(std::move(letters)), k_(k) {
  check_k(k);
  if (!is_kpell(letters_, k)) throw DomainError("not a " + std::to_string(k) + "-Pell word: " + render_word(letters_));
}

KPellWord KPellWord::parse(std::string_view text, unsigned k) { return KPellWord(parse_letters(text), k); }

FibWord::FibWord(std::vector<Letter> bits) : bits_(std::move(bits)) {
  if (!is_fibonacci_string(bits_)) throw DomainError("not a Fibonacci string: " + render_word(bits_));
}

FibWord FibWord::parse(std::string_view text) { return FibWord(parse_letters(text)); }

void WordList::push_back(std::span<const Letter> w) {
  if (w.size() != length_) throw DomainError("word length mismatch in WordList");
  data_.insert(data_.end(), w.begin(), w.end());
  ++count_;
}

BigInt kpell_count(unsigned n, unsigned k) {
  check_k(k);
  return k_fibonacci(n + 1, k);
}
BigInt fib_count(unsigned m) { return fibonacci(m + 2); }

WordList enumerate_kpell_flat(unsigned n, unsigned k, std::uint64_t budget) {
  check_k(k);
  const std::uint64_t total = checked_budget(kpell_count(n, k), budget, "k-Pell vertex count");
  WordList out(n);
  out.reserve(total);
  std::vector<Letter> buf(n);
  // Tokens in increasing order 0 < 1 < ... < k-1 < kk give lexicographic output.
  std::function<void(unsigned)> rec = [&](unsigned pos) {
    if (pos == n) {
      out.push_back(buf);
      return;
    }
    for (unsigned x = 0; x < k; ++x) {
      buf[pos] = static_cast<Letter>(x);
      rec(pos + 1);
    }
    if (pos + 2 <= n) {
      buf[pos] = buf[pos + 1] = static_cast<Letter>(k);
      rec(pos + 2);
    }
  };
  rec(0);
  return out;
}

std::vector<KPellWord> enumerate_kpell(unsigned n, unsigned k, std::uint64_t budget) {
  WordList flat = enumerate_kpell_flat(n, k, budget);
  std::vector<KPellWord> out;
  out.reserve(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) out.emplace_back(std::vector<Letter>(flat[i].begin(), flat[i].end()), k);
  return out;
}

WordList enumerate_fib_flat(unsigned m, std::uint64_t budget) {
  const std::uint64_t total = checked_budget(fib_count(m), budget, "Fibonacci cube vertex count");
  WordList out(m);
  out.reserve(total);
  std::vector<Letter> buf(m);
  std::function<void(unsigned)> rec = [&](unsigned pos) {
    if (pos == m) {
      out.push_back(buf);
      return;
    }
    buf[pos] = 0;
    rec(pos + 1);
    buf[pos] = 1;
    if (pos + 1 == m) {
      rec(pos + 1);
    } else {
      buf[pos + 1] = 0;
      rec(pos + 2);
    }
  };
  rec(0);
  return out;
}

std::vector<FibWord> enumerate_fib(unsigned m, std::uint64_t budget) {
  WordList flat = enumerate_fib_flat(m, budget);
  std::vector<FibWord> out;
  out.reserve(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) out.emplace_back(std::vector<Letter>(flat[i].begin(), flat[i].end()));
  return out;
}

std::size_t count_letter(std::span<const Letter> w, Letter i) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), i));
}

std::vector<std::size_t> runs_of(std::span<const Letter> w, Letter i) {
  std::vector<std::size_t> runs;
  std::size_t run = 0;
  for (Letter x : w) {
    if (x == i) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  return runs;
}

bool in_theta(const KPellWord& w) {
  const unsigned k = w.k();
  if (k % 2 != 0) throw DomainError("Theta is defined for even k only");
  const Letter z = static_cast<Letter>(k / 2), c = static_cast<Letter>(k / 2 - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != z && w[i] != c) return false;
    if (w[i] == c && i + 1 < w.size() && w[i + 1] == c) return false;
  }
  return true;
}

bool in_phi(const KPellWord& w) {
  const unsigned k = w.k();
  if (k % 2 == 0 || w.size() % 2 != 0) throw DomainError("Phi is defined for odd k and even length only");
  const Letter a = static_cast<Letter>((k - 1) / 2), b = static_cast<Letter>((k + 1) / 2);
  bool seen_ba = false;
  for (std::size_t i = 0; i < w.size(); i += 2) {
    Letter x = w[i], y = w[i + 1];
    if (x == a && y == a) continue;
    if (x == a && y == b) {
      if (seen_ba) return false;
    } else if (x == b && y == a) {
      seen_ba = true;
    } else {
      return false;
    }
  }
  return true;
}

bool in_psi(const KPellWord& w) {
  const unsigned k = w.k();
  if (k % 2 == 0 || w.size() % 2 == 0) throw DomainError("Psi is defined for odd k and odd length only");
  const Letter a = static_cast<Letter>((k - 1) / 2), b = static_cast<Letter>((k + 1) / 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != a && w[i] != b) return false;
    if (w[i] == b && i + 1 < w.size() && w[i + 1] == b) return false;
  }
  if (w[0] != a || w[w.size() - 1] != a) return false;
  for (std::size_t r : runs_of(w, a)) {
    if (r % 2 == 0) return false;
  }
  return true;
}

std::vector<KPellWord> enumerate_center_family(unsigned n, unsigned k) {
  check_k(k);
  if (n < 2) throw DomainError("center families are defined for n >= 2");
  std::vector<std::vector<Letter>> raw;
  std::vector<Letter> buf;
  if (k % 2 == 0) {
    const Letter z = static_cast<Letter>(k / 2), c = static_cast<Letter>(k / 2 - 1);
    std::function<void()> rec = [&]() {
      if (buf.size() == n) {
        raw.push_back(buf);
        return;
      }
      buf.push_back(z);
      rec();
      buf.pop_back();
      if (buf.empty() || buf.back() != c) {
        buf.push_back(c);
        rec();
        buf.pop_back();
      }
    };
    rec();
  } else {
    const Letter a = static_cast<Letter>((k - 1) / 2), b = static_cast<Letter>((k + 1) / 2);
    if (n % 2 == 0) {
      std::function<void(bool)> rec = [&](bool seen_ba) {
        if (buf.size() == n) {
          raw.push_back(buf);
          return;
        }
        const Letter pairs[3][2] = {{a, a}, {a, b}, {b, a}};
        for (const auto& p : pairs) {
          if (p[0] == a && p[1] == b && seen_ba) continue;
          buf.push_back(p[0]);
          buf.push_back(p[1]);
          rec(seen_ba || (p[0] == b));
          buf.pop_back();
          buf.pop_back();
        }
      };
      rec(false);
    } else {
      // a^(odd) (b a^(odd))*
      std::function<void()> rec = [&]() {
        for (std::size_t len = 1; buf.size() + len <= n; len += 2) {
          buf.insert(buf.end(), len, a);
          if (buf.size() == n) {
            raw.push_back(buf);
          } else if (buf.size() + 2 <= n) {
            buf.push_back(b);
            rec();
            buf.pop_back();
          }
          buf.resize(buf.size() - len);
        }
      };
      rec();
    }
  }
  std::sort(raw.begin(), raw.end());
  std::vector<KPellWord> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r), k);
  return out;
}

BigInt center_family_size(unsigned n, unsigned k) {
  check_k(k);
  if (n < 2) throw DomainError("center families are defined for n >= 2");
  if (k % 2 == 0) return fibonacci(n + 2);
  if (n % 2 == 0) return BigInt(n + 4) * (BigInt(1) << (n / 2)) / 4;
  return BigInt(1) << ((n - 1) / 2);
}

}  // namespace kpell
