/*
 * Copyright 2026 The bookbias Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bookbias/stemmer.hpp"

#include <cstring>

#include "bookbias/strings.hpp"

namespace bookbias {
namespace {

// Direct port of the classic reference stemmer. b[0..k] is the word being
// stemmed; j marks the stem end while a candidate suffix is under test.
struct Porter {
  std::string b;
  int k = 0;
  int j = 0;

  bool cons(int i) const {
    switch (b[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return (i == 0) ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      i++;
    }
    i++;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        i++;
      }
      i++;
      n++;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        i++;
      }
      i++;
    }
  }

  bool vowelinstem() const {
    for (int i = 0; i <= j; i++)
      if (!cons(i)) return true;
    return false;
  }

  bool doublec(int jj) const {
    if (jj < 1) return false;
    if (b[jj] != b[jj - 1]) return false;
    return cons(jj);
  }

  // consonant - vowel - consonant, where the final consonant is not w, x or
  // y; used to restore a trailing e (hop-ing -> hope).
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b[i];
    if (ch == 'w' || ch == 'x' || ch == 'y') return false;
    return true;
  }

  bool ends(const char* s) {
    int length = static_cast<int>(std::strlen(s));
    if (length > k + 1) return false;
    if (b.compare(k - length + 1, length, s) != 0) return false;
    j = k - length;
    return true;
  }

  void setto(const char* s) {
    int length = static_cast<int>(std::strlen(s));
    b.replace(j + 1, b.size() - (j + 1), s);
    k = j + length;
  }

  void r(const char* s) {
    if (m() > 0) setto(s);
  }

  // Plurals and -ed / -ing.
  void step1ab() {
    if (b[k] == 's') {
      if (ends("sses"))
        k -= 2;
      else if (ends("ies"))
        setto("i");
      else if (b[k - 1] != 's')
        k--;
    }
    if (ends("eed")) {
      if (m() > 0) k--;
    } else if ((ends("ed") || ends("ing")) && vowelinstem()) {
      k = j;
      if (ends("at"))
        setto("ate");
      else if (ends("bl"))
        setto("ble");
      else if (ends("iz"))
        setto("ize");
      else if (doublec(k)) {
        k--;
        char ch = b[k];
        if (ch == 'l' || ch == 's' || ch == 'z') k++;
      } else if (m() == 1 && cvc(k))
        setto("e");
    }
  }

  // Terminal y -> i when another vowel exists in the stem.
  void step1c() {
    if (ends("y") && vowelinstem()) b[k] = 'i';
  }

  void step2() {
    if (k == 0) return;
    switch (b[k - 1]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { r("ble"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { r("log"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b[k]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k == 0) return;
    switch (b[k - 1]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j >= 0 && (b[j] == 's' || b[j] == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k = j;
  }

  void step5() {
    j = k;
    if (b[k] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k - 1))) k--;
    }
    if (b[k] == 'l' && doublec(k) && m() > 1) k--;
  }
};

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string lower = ascii_lower(word);
  if (lower.size() <= 2) return lower;

  Porter p;
  p.b = std::move(lower);
  p.k = static_cast<int>(p.b.size()) - 1;
  p.step1ab();
  p.step1c();
  p.step2();
  p.step3();
  p.step4();
  p.step5();
  p.b.resize(p.k + 1);
  return p.b;
}

}  // namespace bookbias
