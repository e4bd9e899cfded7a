#ifndef DRIG_REGEX_HPP
#define DRIG_REGEX_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drig/rig.hpp"

namespace drig::lang {

struct Alphabet {
    std::vector<char> symbols{'a', 'b'};
    bool contains(char c) const;
};

/// Regular expression held in ACI-canonical smart-constructor form:
/// Alt spines are right-nested, sorted and duplicate-free with Empty
/// dropped; Cat spines are right-nested with Eps dropped and Empty
/// annihilating; Star collapses Star/Eps/Empty. Structural equality on
/// canonical forms coincides with ACI-equivalence of the inputs.
class Regex {
public:
    enum class Kind { Empty, Eps, Lit, Alt, Cat, Star };

    static Regex empty();
    static Regex eps();
    static Regex lit(char c);
    static Regex alt(const Regex& a, const Regex& b);
    static Regex cat(const Regex& a, const Regex& b);
    static Regex star(const Regex& a);

    Kind kind() const;
    char lit_char() const;
    Regex left() const;
    Regex right() const;
    Regex inner() const;

    friend bool operator==(const Regex& a, const Regex& b);
    friend int compare(const Regex& a, const Regex& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

int compare(const Regex& a, const Regex& b);

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position;
};

/// Grammar: `|` alternation (lowest), juxtaposition, postfix `*`,
/// `(...)`, `0` = Empty, `1` = Eps, single-char literals.
Regex parse_regex(std::string_view text, const Alphabet& alpha = {});

/// Canonical printer; parse(print(parse(t))) == parse(t).
std::string print_regex(const Regex& r);

bool nullable(const Regex& r);

/// Brzozowski derivative by one symbol, in canonical form.
Regex deriv(const Regex& r, char a);

/// Left fold of deriv over the word; deriv_word(r, "") == r.
Regex deriv_word(const Regex& r, std::string_view w);

bool matches(const Regex& r, std::string_view w);

/// Finite window onto a language: all member words of length <= max_length.
struct LangSample {
    std::size_t max_length = 0;
    std::set<std::string> words;

    friend bool operator==(const LangSample&, const LangSample&) = default;
};

/// Denotational oracle: computes the language window by structural
/// recursion (length-bounded union/concat/star closure), independent of
/// the derivative machinery.
LangSample enumerate(const Regex& r, std::size_t max_length,
                     std::size_t cap = 10);

/// Window-level check of the twisted Leibniz rule
///   d_a(r s) = d_a(r) s  u  [nullable r] d_a(s).
LawReport check_twisted_leibniz(const Regex& r, const Regex& s, char a,
                                std::size_t max_length);

/// The untwisted variant (gamma = id, i.e. always r d_a(s) on the
/// right); fails whenever r is not nullable and r d_a(s) leaks words.
LawReport check_untwisted_leibniz(const Regex& r, const Regex& s, char a,
                                  std::size_t max_length);

/// Window-level d_a(r|s) = d_a(r) | d_a(s), plus d_a(Empty) = Empty.
LawReport check_linearity(const Regex& r, const Regex& s, char a,
                          std::size_t max_length);

/// When the window of m looks like a monoid language (contains the
/// empty word, closed under concatenation within the window), checks
/// the right module action: L(d_w m) . L(m) subset of L(d_w m).
LawReport check_module_action(const Regex& m, std::string_view w,
                              std::size_t max_length);

struct Dfa {
    std::vector<Regex> states;  // states are canonical derivatives
    Alphabet alphabet;
    std::vector<std::vector<std::size_t>> trans;  // [state][symbol index]
    std::vector<bool> accepting;
    std::size_t start = 0;

    bool accepts(std::string_view w) const;
};

/// Classical Brzozowski DFA: derivative classes under ACI
/// canonicalization. Throws when more than state_cap states appear.
Dfa build_dfa(const Regex& r, const Alphabet& alpha = {},
              std::size_t state_cap = 10000);

/// Seeded size-bounded generator, weighted toward Cat/Alt.
Regex random_regex(Rng& rng, const Alphabet& alpha, int depth);

/// All words over the alphabet of length <= max_length.
std::vector<std::string> all_words(const Alphabet& alpha,
                                   std::size_t max_length);

/// The rig of language windows: add = union, mul = length-truncated
/// concatenation, one = {""}. Registered with the law harness as
/// "langwindow"; maximally nontaut (every window is u-idempotent).
RigInstance make_langwindow_rig(std::size_t max_length = 4,
                                const Alphabet& alpha = {});

}  // namespace drig::lang

#endif
