#include "mrel/env_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace mrel {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

// Cursor over a pair list "elem -> {a, b}, elem -> {}" (without the outer
// relation braces). Shared by the file loader and the literal parser.
class PairScanner {
  public:
    PairScanner(const Universe& u, const std::string& text, std::size_t line)
        : u_(u), text_(text), line_(line) {}

    std::vector<Multirelation::Pair> scan() {
        std::vector<Multirelation::Pair> pairs;
        skip_space();
        while (pos_ < text_.size()) {
            pairs.push_back(pair());
            skip_space();
            if (pos_ < text_.size()) {
                expect(',');
                skip_space();
            }
        }
        return pairs;
    }

  private:
    Multirelation::Pair pair() {
        const std::string name = ident();
        skip_space();
        expect('-');
        expect('>');
        skip_space();
        const std::uint32_t image = set_bits();
        std::size_t elem;
        try {
            elem = u_.index_of(name);
        } catch (const Error&) {
            fail("unknown element '" + name + "'");
        }
        return {static_cast<std::uint32_t>(elem), image};
    }

    std::uint32_t set_bits() {
        expect('{');
        std::uint32_t bits = 0;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '}') {
            ++pos_;
            return bits;
        }
        while (true) {
            const std::string name = ident();
            try {
                bits |= 1u << u_.index_of(name);
            } catch (const Error&) {
                fail("unknown element '" + name + "'");
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                skip_space();
                continue;
            }
            expect('}');
            return bits;
        }
    }

    std::string ident() {
        skip_space();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                text_[end] == '_')) {
            ++end;
        }
        if (end == pos_) fail("expected an element name");
        std::string out = text_.substr(pos_, end - pos_);
        pos_ = end;
        return out;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& message) {
        throw FileFormatError(message, line_);
    }

    const Universe& u_;
    const std::string& text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Multirelation parse_relation_literal(const Universe& u, const std::string& text) {
    const std::string s = strip(text);
    if (s.empty() || s.front() != '{' || s.back() != '}') {
        throw FileFormatError("relation literal must be enclosed in '{ }'", 1);
    }
    const std::string body = s.substr(1, s.size() - 2);
    return Multirelation(u, PairScanner(u, body, 1).scan());
}

Environment load_env(std::istream& in) {
    std::optional<Universe> universe;
    std::optional<Environment> env;
    std::optional<std::string> open_rel;
    std::vector<Multirelation::Pair> open_pairs;
    std::string raw;
    std::size_t lineno = 0;

    auto close_rel = [&](std::size_t line) {
        if (!open_rel) return;
        if (env->bound(*open_rel)) {
            throw FileFormatError("duplicate relation name '" + *open_rel + "'", line);
        }
        try {
            env->bind(*open_rel, Multirelation(*universe, std::move(open_pairs)));
        } catch (const FileFormatError&) {
            throw;
        } catch (const Error& e) {
            throw FileFormatError(e.what(), line);
        }
        open_rel.reset();
        open_pairs.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        const auto words = split_words(line);

        if (words[0] == "universe") {
            if (universe) throw FileFormatError("second 'universe' line", lineno);
            try {
                universe.emplace(
                    std::vector<std::string>(words.begin() + 1, words.end()));
            } catch (const Error& e) {
                throw FileFormatError(e.what(), lineno);
            }
            env.emplace(*universe);
            continue;
        }
        if (!universe) {
            throw FileFormatError("expected a 'universe' line first", lineno);
        }
        if (words[0] == "rel") {
            if (open_rel) throw FileFormatError("'rel' inside an open block", lineno);
            if (words.size() != 2) {
                throw FileFormatError("'rel' takes exactly one name", lineno);
            }
            open_rel = words[1];
            continue;
        }
        if (words[0] == "end") {
            if (!open_rel) throw FileFormatError("'end' without 'rel'", lineno);
            close_rel(lineno);
            continue;
        }
        if (!open_rel) {
            throw FileFormatError("pair line outside a 'rel' block", lineno);
        }
        if (line.front() == '{') {
            const Multirelation r = parse_relation_literal(*universe, line);
            for (const auto& p : r.pairs()) open_pairs.push_back(p);
            continue;
        }
        auto pairs = PairScanner(*universe, line, lineno).scan();
        for (const auto& p : pairs) open_pairs.push_back(p);
    }
    if (open_rel) {
        throw FileFormatError("unterminated 'rel " + *open_rel + "' block", lineno);
    }
    if (!env) throw FileFormatError("missing 'universe' line", lineno == 0 ? 1 : lineno);
    return *env;
}

Environment load_env_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_env(in);
}

Environment parse_env(const std::string& text) {
    std::istringstream in(text);
    return load_env(in);
}

std::string env_to_text(const Environment& env) {
    std::string out = "universe";
    for (const auto& name : env.universe().names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (const auto& [name, rel] : env.bindings()) {
        out += "rel " + name + '\n';
        for (const auto& p : rel.pairs()) {
            out += env.universe().name(p.elem);
            out += " -> ";
            out += ElementSet(env.universe(), p.image).to_string();
            out += '\n';
        }
        out += "end\n";
    }
    return out;
}

void save_env_file(const Environment& env, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << env_to_text(env);
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace mrel
