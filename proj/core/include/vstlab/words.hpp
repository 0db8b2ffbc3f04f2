/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Words over the generator alphabets of VSTM_n / VST_n and of the
// connecting-string monoid M_n, plus the permutation map pi.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstlab {

enum class GenKind : std::uint8_t { S, Tau, TauInv, Nu, Mu, MuInv, Gamma };

/// standard: s_i, t_i, T_i, v_i. reduced: s1, t1, T1 and every v_i.
/// connecting: m_i, M_i, g_i, v_i. reduced-connecting: m1, M1, g1, every v_i.
enum class Alphabet : std::uint8_t { Standard, Reduced, Connecting, ReducedConnecting };

enum class Mode : std::uint8_t { Monoid, Group };

struct Generator {
  GenKind kind = GenKind::S;
  int index = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

char kind_prefix(GenKind kind);
/// Token such as `s1`, `T3`, `m2`.
std::string to_token(Generator g);
/// Letter that cancels g in free_reduce (s and v are involutions).
std::optional<Generator> free_inverse(Generator g);

std::string_view to_string(Alphabet a);
std::string_view to_string(Mode m);
Alphabet parse_alphabet(std::string_view text);
Mode parse_mode(std::string_view text);

/// True when `kind` with `index` belongs to the alphabet in the given mode.
bool admits(Alphabet alphabet, Mode mode, Generator g);

class Word {
 public:
  Word() = default;
  /// Validates every letter; throws ConstraintError on index or alphabet
  /// violations.
  Word(int n, Alphabet alphabet, Mode mode, std::vector<Generator> letters = {});

  /// Whitespace separated tokens `<prefix><index>`; `e` is the empty word.
  static Word parse(std::string_view text, int n, Alphabet alphabet = Alphabet::Standard,
                    Mode mode = Mode::Group);

  int strands() const { return n_; }
  Alphabet alphabet() const { return alphabet_; }
  Mode mode() const { return mode_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Canonical text, `e` for the empty word.
  std::string to_string() const;

  /// Same strands, alphabet and mode, different letters.
  Word with_letters(std::vector<Generator> letters) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int n_ = 2;
  Alphabet alphabet_ = Alphabet::Standard;
  Mode mode_ = Mode::Group;
  std::vector<Generator> letters_;
};

/// Deletes adjacent s_i s_i, v_i v_i, t_i T_i, T_i t_i, m_i M_i, M_i m_i
/// until none remain.
Word free_reduce(const Word& w);

/// Bijection of {1..n}; images()[k-1] is the image of k.
class Permutation {
 public:
  explicit Permutation(int n);
  /// Throws ConstraintError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

  /// a followed by b: k -> b(a(k)).
  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Every generator of index i maps to (i, i+1), except m, M and g which
/// map to the identity. Letters compose left to right.
Permutation pi_image(const Word& w);

bool is_pure(const Word& w);

}  // namespace vstlab
