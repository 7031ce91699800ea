#include "tau_atlas/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tau_atlas {

namespace {

std::vector<int> parse_int_list(const std::string& text, bool allow_packed_digits) {
    std::string body;
    for (char ch : text)
        if (ch != '[' && ch != ']') body.push_back(ch);
    bool has_sep = body.find_first_of(", ") != std::string::npos;
    std::vector<int> out;
    if (!has_sep && allow_packed_digits && body.size() > 1) {
        for (char ch : body) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("malformed list: " + text);
            out.push_back(ch - '0');
        }
        return out;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        char* end = nullptr;
        long v = std::strtol(token.c_str(), &end, 10);
        if (*end != '\0') throw std::invalid_argument("malformed list: " + text);
        out.push_back(static_cast<int>(v));
        token.clear();
    };
    for (char ch : body) {
        if (ch == ',' || ch == ' ') flush();
        else token.push_back(ch);
    }
    flush();
    return out;
}

void check_letters(const GenWord& word, int degree) {
    for (int l : word.letters)
        if (l < 1 || l >= degree)
            throw std::out_of_range("generator s_" + std::to_string(l) + " out of range for degree " + std::to_string(degree));
}

Permutation times_simple_right(const Permutation& w, int i) {
    std::vector<int> im = w.images();
    std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
    return Permutation(std::move(im));
}

// r[0, len) is a reduced word of w and i is a right descent of w.  Rewrites
// the prefix in place so that it ends with i.
void make_end_with(std::vector<int>& r, std::size_t len, const Permutation& w, int i, std::vector<WordMove>* log) {
    int j = r[len - 1];
    if (j == i) return;
    Permutation shorter = times_simple_right(w, j);
    make_end_with(r, len - 1, shorter, i, log);
    if (std::abs(i - j) >= 2) {
        std::swap(r[len - 2], r[len - 1]);
        if (log) log->push_back({'b', len - 2});
        return;
    }
    // prefix now ends "... i j"; bring j before i as well, then braid.
    make_end_with(r, len - 2, times_simple_right(shorter, i), j, log);
    r[len - 3] = i;
    r[len - 2] = j;
    r[len - 1] = i;
    if (log) log->push_back({'c', len - 3});
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::simple_reflection(int degree, int i) {
    if (i < 1 || i >= degree) throw std::out_of_range("simple reflection index out of range");
    return times_simple_right(identity(degree), i);
}

Permutation Permutation::longest(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = degree - i;
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text) { return Permutation(parse_int_list(text, true)); }

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
}

std::string GenWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
    return os.str();
}

GenWord GenWord::parse(const std::string& text) { return GenWord{parse_int_list(text, false)}; }

std::vector<int> RootVector::alpha_coords() const {
    std::vector<int> out;
    int acc = 0;
    for (std::size_t j = 0; j + 1 < coords.size(); ++j) {
        acc += coords[j];
        out.push_back(acc);
    }
    return out;
}

bool RootVector::is_positive() const {
    auto a = alpha_coords();
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; }) &&
           std::any_of(a.begin(), a.end(), [](int x) { return x > 0; });
}

bool RootVector::is_negative() const {
    auto a = alpha_coords();
    return std::all_of(a.begin(), a.end(), [](int x) { return x <= 0; }) &&
           std::any_of(a.begin(), a.end(), [](int x) { return x < 0; });
}

Permutation compose(const Permutation& u, const Permutation& w) {
    if (u.degree() != w.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(static_cast<std::size_t>(w.degree()));
    for (int i = 1; i <= w.degree(); ++i) im[static_cast<std::size_t>(i - 1)] = u(w(i));
    return Permutation(std::move(im));
}

int inversion_length(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.degree(); ++i)
        for (int j = i + 1; j <= w.degree(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

bool has_left_descent(const Permutation& w, int i) {
    auto inv = w.inverse();
    return inv(i) > inv(i + 1);
}

bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

Permutation evaluate_word(const GenWord& word, int degree) {
    check_letters(word, degree);
    Permutation w = Permutation::identity(degree);
    for (int l : word.letters) w = times_simple_right(w, l);
    return w;
}

GenWord reduce_word(const GenWord& word, int degree, std::vector<WordMove>* log) {
    check_letters(word, degree);
    std::vector<int> r;
    Permutation w = Permutation::identity(degree);
    for (int letter : word.letters) {
        if (!has_right_descent(w, letter)) {
            r.push_back(letter);
        } else {
            make_end_with(r, r.size(), w, letter, log);
            if (log) log->push_back({'a', r.size() - 1});
            r.pop_back();
        }
        w = times_simple_right(w, letter);
    }
    return GenWord{std::move(r)};
}

GenWord canonical_reduced_word(const Permutation& w) {
    GenWord out;
    Permutation cur = w;
    while (!cur.is_identity()) {
        int i = 1;
        while (!has_left_descent(cur, i)) ++i;
        out.letters.push_back(i);
        cur = compose(Permutation::simple_reflection(cur.degree(), i), cur);
    }
    return out;
}

bool is_reduced(const GenWord& word, int degree) {
    return static_cast<int>(word.size()) == inversion_length(evaluate_word(word, degree));
}

std::vector<GenWord> braid_class(const GenWord& word) {
    std::set<GenWord> seen{word};
    std::queue<GenWord> todo;
    todo.push(word);
    while (!todo.empty()) {
        GenWord cur = todo.front();
        todo.pop();
        const auto& l = cur.letters;
        auto visit = [&](GenWord next) {
            if (seen.insert(next).second) todo.push(std::move(next));
        };
        for (std::size_t k = 0; k + 1 < l.size(); ++k)
            if (std::abs(l[k] - l[k + 1]) >= 2) {
                GenWord next = cur;
                std::swap(next.letters[k], next.letters[k + 1]);
                visit(std::move(next));
            }
        for (std::size_t k = 0; k + 2 < l.size(); ++k)
            if (l[k] == l[k + 2] && std::abs(l[k] - l[k + 1]) == 1) {
                GenWord next = cur;
                next.letters[k] = l[k + 1];
                next.letters[k + 1] = l[k];
                next.letters[k + 2] = l[k + 1];
                visit(std::move(next));
            }
    }
    return {seen.begin(), seen.end()};
}

bool left_leq(const Permutation& w, const Permutation& w2) {
    if (w.degree() != w2.degree()) throw std::invalid_argument("left_leq: degree mismatch");
    return inversion_length(w2) == inversion_length(w) + inversion_length(compose(w2, w.inverse()));
}

std::vector<Permutation> all_permutations(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

HassePoset weak_left_hasse(int degree) {
    if (degree < 1) throw std::invalid_argument("weak_left_hasse: degree must be positive");
    auto perms = all_permutations(degree);
    std::map<Permutation, std::size_t> index;
    HassePoset h;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        index[perms[k]] = k;
        h.labels.push_back(perms[k].str());
    }
    for (std::size_t k = 0; k < perms.size(); ++k)
        for (int i = 1; i < degree; ++i)
            if (has_left_descent(perms[k], i)) {
                h.edges.emplace_back(k, index.at(compose(Permutation::simple_reflection(degree, i), perms[k])));
                h.edge_labels.push_back(i);
            }
    return h;
}

Permutation coset_prefix(int n, int i) {
    Permutation c = Permutation::identity(n + 1);
    for (int k = i + 1; k <= n; ++k) c = times_simple_right(c, k);
    return c;
}

Permutation embed(const Permutation& v, int degree) {
    std::vector<int> im = v.images();
    for (int k = v.degree() + 1; k <= degree; ++k) im.push_back(k);
    return Permutation(std::move(im));
}

CosetFactor coset_factorize(const Permutation& w) {
    const int n = w.degree() - 1;
    if (n < 0) throw std::invalid_argument("coset_factorize: empty permutation");
    const int i = w(n + 1) - 1;
    Permutation rest = compose(coset_prefix(n, i).inverse(), w);
    std::vector<int> im(rest.images().begin(), rest.images().end() - 1);
    return {i, Permutation(std::move(im))};
}

RootVector root_after_prefix(const GenWord& word, std::size_t k, int degree) {
    check_letters(word, degree);
    if (k < 1 || k + 1 > word.size()) throw std::out_of_range("root_after_prefix: prefix length out of range");
    GenWord prefix{std::vector<int>(word.letters.begin(), word.letters.begin() + static_cast<std::ptrdiff_t>(k))};
    Permutation u = evaluate_word(prefix, degree);
    int i = word.letters[k];
    RootVector r{std::vector<int>(static_cast<std::size_t>(degree), 0)};
    r.coords[static_cast<std::size_t>(u(i) - 1)] += 1;
    r.coords[static_cast<std::size_t>(u(i + 1) - 1)] -= 1;
    return r;
}

}  // namespace tau_atlas
