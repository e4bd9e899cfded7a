#include "drig/regex.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace drig::lang {

bool Alphabet::contains(char c) const {
    return std::find(symbols.begin(), symbols.end(), c) != symbols.end();
}

struct Regex::Node {
    Kind kind;
    char c = 0;
    std::shared_ptr<const Node> l, r;
};

Regex::Kind Regex::kind() const { return node_->kind; }
char Regex::lit_char() const { return node_->c; }

Regex Regex::left() const { return Regex{node_->l}; }
Regex Regex::right() const { return Regex{node_->r}; }
Regex Regex::inner() const { return Regex{node_->l}; }

Regex Regex::empty() {
    static const Regex e{std::make_shared<Node>(Node{Kind::Empty})};
    return e;
}

Regex Regex::eps() {
    static const Regex e{std::make_shared<Node>(Node{Kind::Eps})};
    return e;
}

Regex Regex::lit(char c) {
    return Regex{std::make_shared<Node>(Node{Kind::Lit, c})};
}

int compare(const Regex& a, const Regex& b) {
    if (a.node_ == b.node_) return 0;
    auto rank = [](Regex::Kind k) {
        switch (k) {
            case Regex::Kind::Empty: return 0;
            case Regex::Kind::Eps: return 1;
            case Regex::Kind::Lit: return 2;
            case Regex::Kind::Star: return 3;
            case Regex::Kind::Cat: return 4;
            case Regex::Kind::Alt: return 5;
        }
        return 6;
    };
    int ra = rank(a.kind()), rb = rank(b.kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.kind()) {
        case Regex::Kind::Empty:
        case Regex::Kind::Eps:
            return 0;
        case Regex::Kind::Lit:
            return a.lit_char() < b.lit_char() ? -1
                 : a.lit_char() > b.lit_char() ? 1 : 0;
        case Regex::Kind::Star:
            return compare(a.inner(), b.inner());
        case Regex::Kind::Cat:
        case Regex::Kind::Alt: {
            int c = compare(a.left(), b.left());
            return c != 0 ? c : compare(a.right(), b.right());
        }
    }
    return 0;
}

bool operator==(const Regex& a, const Regex& b) { return compare(a, b) == 0; }

namespace {

void flatten_alt(const Regex& r, std::vector<Regex>& out) {
    if (r.kind() == Regex::Kind::Alt) {
        flatten_alt(r.left(), out);
        flatten_alt(r.right(), out);
    } else if (r.kind() != Regex::Kind::Empty) {
        out.push_back(r);
    }
}

void flatten_cat(const Regex& r, std::vector<Regex>& out) {
    if (r.kind() == Regex::Kind::Cat) {
        flatten_cat(r.left(), out);
        flatten_cat(r.right(), out);
    } else if (r.kind() != Regex::Kind::Eps) {
        out.push_back(r);
    }
}

}  // namespace

Regex Regex::alt(const Regex& a, const Regex& b) {
    std::vector<Regex> parts;
    flatten_alt(a, parts);
    flatten_alt(b, parts);
    std::sort(parts.begin(), parts.end(),
              [](const Regex& x, const Regex& y) { return compare(x, y) < 0; });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    if (parts.empty()) return empty();
    Regex acc = parts.back();
    for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
        acc = Regex{std::make_shared<Node>(Node{Kind::Alt, 0, it->node_, acc.node_})};
    return acc;
}

Regex Regex::cat(const Regex& a, const Regex& b) {
    if (a.kind() == Kind::Empty || b.kind() == Kind::Empty) return empty();
    std::vector<Regex> parts;
    flatten_cat(a, parts);
    flatten_cat(b, parts);
    if (parts.empty()) return eps();
    Regex acc = parts.back();
    for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
        acc = Regex{std::make_shared<Node>(Node{Kind::Cat, 0, it->node_, acc.node_})};
    return acc;
}

Regex Regex::star(const Regex& a) {
    switch (a.kind()) {
        case Kind::Empty:
        case Kind::Eps:
            return eps();
        case Kind::Star:
            return a;
        default:
            return Regex{std::make_shared<Node>(Node{Kind::Star, 0, a.node_})};
    }
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : Error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alpha)
        : text_(text), alpha_(alpha) {}

    Regex parse() {
        Regex r = alternation();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return r;
    }

private:
    std::string_view text_;
    const Alphabet& alpha_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    Regex alternation() {
        Regex r = concatenation();
        while (!at_end() && peek() == '|') {
            ++pos_;
            r = Regex::alt(r, concatenation());
        }
        return r;
    }

    bool starts_atom() const {
        if (at_end()) return false;
        char c = peek();
        return c == '(' || c == '0' || c == '1' || alpha_.contains(c);
    }

    Regex concatenation() {
        if (!starts_atom()) throw ParseError("expected expression", pos_);
        Regex r = starred();
        while (starts_atom()) r = Regex::cat(r, starred());
        return r;
    }

    Regex starred() {
        Regex r = atom();
        while (!at_end() && peek() == '*') {
            ++pos_;
            r = Regex::star(r);
        }
        return r;
    }

    Regex atom() {
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            Regex r = alternation();
            if (at_end() || peek() != ')')
                throw ParseError("unmatched '('", open);
            ++pos_;
            return r;
        }
        if (c == '0') { ++pos_; return Regex::empty(); }
        if (c == '1') { ++pos_; return Regex::eps(); }
        if (alpha_.contains(c)) { ++pos_; return Regex::lit(c); }
        throw ParseError("symbol '" + std::string(1, c) + "' not in alphabet", pos_);
    }
};

void print_rec(const Regex& r, int prec, std::string& out) {
    switch (r.kind()) {
        case Regex::Kind::Empty: out += '0'; return;
        case Regex::Kind::Eps: out += '1'; return;
        case Regex::Kind::Lit: out += r.lit_char(); return;
        case Regex::Kind::Star:
            print_rec(r.inner(), 2, out);
            out += '*';
            return;
        case Regex::Kind::Cat: {
            bool paren = prec > 1;
            if (paren) out += '(';
            print_rec(r.left(), 2, out);
            print_rec(r.right(), 1, out);
            if (paren) out += ')';
            return;
        }
        case Regex::Kind::Alt: {
            bool paren = prec > 0;
            if (paren) out += '(';
            print_rec(r.left(), 1, out);
            out += '|';
            print_rec(r.right(), 0, out);
            if (paren) out += ')';
            return;
        }
    }
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alpha) {
    return Parser(text, alpha).parse();
}

std::string print_regex(const Regex& r) {
    std::string out;
    print_rec(r, 0, out);
    return out;
}

// ----------------------------------------------------------- derivatives

bool nullable(const Regex& r) {
    switch (r.kind()) {
        case Regex::Kind::Empty: return false;
        case Regex::Kind::Eps: return true;
        case Regex::Kind::Lit: return false;
        case Regex::Kind::Alt: return nullable(r.left()) || nullable(r.right());
        case Regex::Kind::Cat: return nullable(r.left()) && nullable(r.right());
        case Regex::Kind::Star: return true;
    }
    return false;
}

Regex deriv(const Regex& r, char a) {
    switch (r.kind()) {
        case Regex::Kind::Empty:
        case Regex::Kind::Eps:
            return Regex::empty();
        case Regex::Kind::Lit:
            return r.lit_char() == a ? Regex::eps() : Regex::empty();
        case Regex::Kind::Alt:
            return Regex::alt(deriv(r.left(), a), deriv(r.right(), a));
        case Regex::Kind::Cat: {
            Regex first = Regex::cat(deriv(r.left(), a), r.right());
            if (!nullable(r.left())) return first;
            return Regex::alt(first, deriv(r.right(), a));
        }
        case Regex::Kind::Star:
            return Regex::cat(deriv(r.inner(), a), r);
    }
    return Regex::empty();
}

Regex deriv_word(const Regex& r, std::string_view w) {
    Regex cur = r;
    for (char c : w) cur = deriv(cur, c);
    return cur;
}

bool matches(const Regex& r, std::string_view w) {
    return nullable(deriv_word(r, w));
}

// ----------------------------------------------------------- enumeration

LangSample enumerate(const Regex& r, std::size_t max_length, std::size_t cap) {
    if (max_length > cap)
        throw Error("enumerate: max_length " + std::to_string(max_length) +
                    " exceeds cap " + std::to_string(cap));
    LangSample out{max_length, {}};
    switch (r.kind()) {
        case Regex::Kind::Empty:
            break;
        case Regex::Kind::Eps:
            out.words.insert("");
            break;
        case Regex::Kind::Lit:
            if (max_length >= 1) out.words.insert(std::string(1, r.lit_char()));
            break;
        case Regex::Kind::Alt: {
            auto l = enumerate(r.left(), max_length, cap);
            auto rr = enumerate(r.right(), max_length, cap);
            out.words = std::move(l.words);
            out.words.insert(rr.words.begin(), rr.words.end());
            break;
        }
        case Regex::Kind::Cat: {
            auto l = enumerate(r.left(), max_length, cap);
            auto rr = enumerate(r.right(), max_length, cap);
            for (const auto& u : l.words)
                for (const auto& v : rr.words)
                    if (u.size() + v.size() <= max_length) out.words.insert(u + v);
            break;
        }
        case Regex::Kind::Star: {
            auto base = enumerate(r.inner(), max_length, cap);
            std::set<std::string> acc{""};
            bool grew = true;
            while (grew) {
                grew = false;
                std::set<std::string> next = acc;
                for (const auto& u : acc)
                    for (const auto& v : base.words) {
                        if (v.empty()) continue;
                        if (u.size() + v.size() <= max_length &&
                            next.insert(u + v).second)
                            grew = true;
                    }
                acc = std::move(next);
            }
            out.words = std::move(acc);
            break;
        }
    }
    return out;
}

// ------------------------------------------------------------ law checks

namespace {

LawReport window_report(const std::string& law, const std::set<std::string>& lhs,
                        const std::set<std::string>& rhs,
                        const std::vector<std::string>& context) {
    LawReport rep;
    rep.instance = "langrig";
    rep.law = law;
    rep.samples = 1;
    if (lhs != rhs) {
        rep.status = LawStatus::Failed;
        rep.counterexample = context;
        std::vector<std::string> diff;
        std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(),
                                      rhs.end(), std::back_inserter(diff));
        for (const auto& w : diff)
            rep.counterexample.push_back("word: \"" + w + "\"");
        for (const auto& c : rep.counterexample) rep.witness.emplace_back(c);
    }
    return rep;
}

}  // namespace

LawReport check_twisted_leibniz(const Regex& r, const Regex& s, char a,
                                std::size_t max_length) {
    auto lhs = enumerate(deriv(Regex::cat(r, s), a), max_length).words;
    auto rhs = enumerate(Regex::cat(deriv(r, a), s), max_length).words;
    if (nullable(r)) {
        auto extra = enumerate(deriv(s, a), max_length).words;
        rhs.insert(extra.begin(), extra.end());
    }
    return window_report("twisted-leibniz", lhs, rhs,
                         {"r=" + print_regex(r), "s=" + print_regex(s),
                          "a=" + std::string(1, a)});
}

LawReport check_untwisted_leibniz(const Regex& r, const Regex& s, char a,
                                  std::size_t max_length) {
    auto lhs = enumerate(deriv(Regex::cat(r, s), a), max_length).words;
    auto rhs = enumerate(Regex::cat(deriv(r, a), s), max_length).words;
    auto extra = enumerate(Regex::cat(r, deriv(s, a)), max_length).words;
    rhs.insert(extra.begin(), extra.end());
    return window_report("untwisted-leibniz", lhs, rhs,
                         {"r=" + print_regex(r), "s=" + print_regex(s),
                          "a=" + std::string(1, a)});
}

LawReport check_linearity(const Regex& r, const Regex& s, char a,
                          std::size_t max_length) {
    auto lhs = enumerate(deriv(Regex::alt(r, s), a), max_length).words;
    auto rhs = enumerate(Regex::alt(deriv(r, a), deriv(s, a)), max_length).words;
    LawReport rep = window_report("linearity", lhs, rhs,
                                  {"r=" + print_regex(r), "s=" + print_regex(s),
                                   "a=" + std::string(1, a)});
    if (!rep.failed() && !(deriv(Regex::empty(), a) == Regex::empty())) {
        rep.status = LawStatus::Failed;
        rep.counterexample = {"d(Empty) != Empty"};
    }
    return rep;
}

LawReport check_module_action(const Regex& m, std::string_view w,
                              std::size_t max_length) {
    LawReport rep;
    rep.instance = "langrig";
    rep.law = "module-action";
    rep.samples = 1;
    auto window = enumerate(m, max_length).words;
    bool monoid = window.count("") > 0;
    if (monoid) {
        for (const auto& u : window) {
            for (const auto& v : window) {
                if (u.size() + v.size() > max_length) continue;
                if (!window.count(u + v)) { monoid = false; break; }
            }
            if (!monoid) break;
        }
    }
    if (!monoid) {
        rep.status = LawStatus::PreconditionUnmet;
        rep.counterexample = {"m=" + print_regex(m),
                              "window is not a monoid language"};
        return rep;
    }
    auto dm = enumerate(deriv_word(m, w), max_length).words;
    for (const auto& x : dm)
        for (const auto& y : window) {
            if (x.size() + y.size() > max_length) continue;
            if (!dm.count(x + y)) {
                rep.status = LawStatus::Failed;
                rep.counterexample = {"m=" + print_regex(m),
                                      "w=" + std::string(w), "x=\"" + x + "\"",
                                      "y=\"" + y + "\""};
                return rep;
            }
        }
    return rep;
}

// ------------------------------------------------------------------- DFA

bool Dfa::accepts(std::string_view w) const {
    std::size_t state = start;
    for (char c : w) {
        auto it = std::find(alphabet.symbols.begin(), alphabet.symbols.end(), c);
        if (it == alphabet.symbols.end())
            throw Error("dfa: symbol not in alphabet");
        state = trans[state][static_cast<std::size_t>(
            it - alphabet.symbols.begin())];
    }
    return accepting[state];
}

Dfa build_dfa(const Regex& r, const Alphabet& alpha, std::size_t state_cap) {
    if (state_cap < 1) throw Error("build_dfa: state_cap must be >= 1");
    Dfa dfa;
    dfa.alphabet = alpha;
    std::map<std::string, std::size_t> index;  // canonical print -> state

    auto intern = [&](const Regex& q) {
        auto key = print_regex(q);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (dfa.states.size() >= state_cap)
            throw Error("build_dfa: state cap " + std::to_string(state_cap) +
                        " exceeded");
        std::size_t id = dfa.states.size();
        index.emplace(std::move(key), id);
        dfa.states.push_back(q);
        dfa.accepting.push_back(nullable(q));
        dfa.trans.emplace_back(alpha.symbols.size(), 0);
        return id;
    };

    dfa.start = intern(r);
    for (std::size_t i = 0; i < dfa.states.size(); ++i) {
        Regex q = dfa.states[i];  // copy: intern may reallocate states
        for (std::size_t k = 0; k < alpha.symbols.size(); ++k)
            dfa.trans[i][k] = intern(deriv(q, alpha.symbols[k]));
    }
    return dfa;
}

// ------------------------------------------------------------ generators

Regex random_regex(Rng& rng, const Alphabet& alpha, int depth) {
    auto pick_lit = [&] {
        auto i = std::uniform_int_distribution<std::size_t>(
            0, alpha.symbols.size() - 1)(rng);
        return Regex::lit(alpha.symbols[i]);
    };
    if (depth <= 0) {
        int roll = std::uniform_int_distribution<int>(0, 9)(rng);
        if (roll < 7) return pick_lit();
        if (roll < 9) return Regex::eps();
        return Regex::empty();
    }
    int roll = std::uniform_int_distribution<int>(0, 99)(rng);
    if (roll < 30)
        return Regex::alt(random_regex(rng, alpha, depth - 1),
                          random_regex(rng, alpha, depth - 1));
    if (roll < 60)
        return Regex::cat(random_regex(rng, alpha, depth - 1),
                          random_regex(rng, alpha, depth - 1));
    if (roll < 75) return Regex::star(random_regex(rng, alpha, depth - 1));
    return pick_lit();
}

std::vector<std::string> all_words(const Alphabet& alpha,
                                   std::size_t max_length) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alpha.symbols) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

RigInstance make_langwindow_rig(std::size_t max_length, const Alphabet& alpha) {
    RigInstance r;
    r.name = "langwindow";
    auto words = all_words(alpha, max_length > 1 ? max_length - 1 : 0);
    r.sample = [words, max_length](Rng& rng) -> Value {
        LangSample s{max_length, {}};
        for (const auto& w : words)
            if (std::uniform_int_distribution<int>(0, 4)(rng) == 0)
                s.words.insert(w);
        return s;
    };
    r.eq = [](const Value& a, const Value& b) {
        return std::any_cast<LangSample>(a) == std::any_cast<LangSample>(b);
    };
    r.zero = LangSample{max_length, {}};
    r.one = LangSample{max_length, {""}};
    r.add = [](const Value& a, const Value& b) -> Value {
        auto x = std::any_cast<LangSample>(a);
        const auto& y = std::any_cast<LangSample>(b);
        x.words.insert(y.words.begin(), y.words.end());
        return x;
    };
    r.mul = [max_length](const Value& a, const Value& b) -> Value {
        const auto& x = std::any_cast<LangSample>(a);
        const auto& y = std::any_cast<LangSample>(b);
        LangSample out{max_length, {}};
        for (const auto& u : x.words)
            for (const auto& v : y.words)
                if (u.size() + v.size() <= max_length) out.words.insert(u + v);
        return out;
    };
    r.render = [](const Value& a) {
        const auto& s = std::any_cast<LangSample>(a);
        std::string out = "{";
        bool first = true;
        for (const auto& w : s.words) {
            if (!first) out += ",";
            first = false;
            out += w.empty() ? "()" : w;
        }
        return out + "}";
    };
    return r;
}

}  // namespace drig::lang
