#include "gentle/dsl.hpp"

#include <sstream>

namespace gentle {

namespace {

struct Token {
    std::string text;
    SourceSpan span;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    std::size_t offset = 0;
    int line = 1, column = 1;
    std::string word;
    SourceSpan word_span;
    auto flush_word = [&]() {
        if (!word.empty()) {
            current.push_back({word, word_span});
            word.clear();
        }
    };
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            flush_word();
            if (!current.empty()) lines.push_back(std::move(current));
            current.clear();
            in_comment = false;
            ++line;
            column = 1;
            ++offset;
            continue;
        }
        if (!in_comment) {
            if (c == '#') {
                flush_word();
                in_comment = true;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                flush_word();
            } else {
                if (word.empty()) word_span = {line, column, offset};
                word.push_back(c);
            }
        }
        ++column;
        ++offset;
    }
    flush_word();
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

}  // namespace

BoundQuiver parse_bound_quiver(const std::string& text) {
    std::vector<std::string> vertex_names;
    std::unordered_map<std::string, int> vertex_index;
    std::vector<Arrow> arrows;
    std::unordered_map<std::string, int> arrow_index;
    std::vector<std::pair<int, int>> relations;
    std::unordered_set<std::string> seen_rel;
    std::vector<std::vector<int>> long_generators;

    for (const auto& line : tokenize(text)) {
        const Token& head = line.front();
        if (head.text == "vertices") {
            if (line.size() < 2) throw ParseError(head.span, "vertices: at least one id required");
            for (std::size_t i = 1; i < line.size(); ++i) {
                if (vertex_index.count(line[i].text))
                    throw ParseError(line[i].span, "duplicate vertex name: " + line[i].text);
                vertex_index.emplace(line[i].text, static_cast<int>(vertex_names.size()));
                vertex_names.push_back(line[i].text);
            }
        } else if (head.text == "arrow") {
            if (line.size() != 4)
                throw ParseError(head.span, "arrow: expected `arrow <name> <src> <tgt>`");
            const std::string& name = line[1].text;
            if (arrow_index.count(name))
                throw ParseError(line[1].span, "duplicate arrow name: " + name);
            auto src = vertex_index.find(line[2].text);
            if (src == vertex_index.end())
                throw ParseError(line[2].span, "undeclared vertex: " + line[2].text);
            auto tgt = vertex_index.find(line[3].text);
            if (tgt == vertex_index.end())
                throw ParseError(line[3].span, "undeclared vertex: " + line[3].text);
            arrow_index.emplace(name, static_cast<int>(arrows.size()));
            arrows.push_back({name, src->second, tgt->second});
        } else if (head.text == "rel") {
            if (line.size() < 3)
                throw ParseError(head.span, "rel: expected at least two arrow names");
            std::vector<int> gen;
            for (std::size_t i = 1; i < line.size(); ++i) {
                auto it = arrow_index.find(line[i].text);
                if (it == arrow_index.end())
                    throw ParseError(line[i].span, "undeclared arrow: " + line[i].text);
                gen.push_back(it->second);
            }
            for (std::size_t i = 0; i + 1 < gen.size(); ++i)
                if (arrows[gen[i]].target != arrows[gen[i + 1]].source)
                    throw ParseError(line[i + 2].span,
                                     "relation not composable: t(" + arrows[gen[i]].name +
                                         ") != s(" + arrows[gen[i + 1]].name + ")");
            if (gen.size() == 2) {
                std::string key = std::to_string(gen[0]) + "," + std::to_string(gen[1]);
                if (seen_rel.insert(key).second) relations.emplace_back(gen[0], gen[1]);
            } else {
                long_generators.push_back(std::move(gen));
            }
        } else {
            throw ParseError(head.span, "unknown directive: " + head.text);
        }
    }
    return BoundQuiver(Quiver(std::move(vertex_names), std::move(arrows)), std::move(relations),
                       std::move(long_generators));
}

std::string print_bound_quiver(const BoundQuiver& bq) {
    std::ostringstream out;
    const Quiver& q = bq.quiver();
    out << "vertices";
    for (const auto& name : q.vertex_names()) out << ' ' << name;
    out << '\n';
    for (const Arrow& a : q.arrows())
        out << "arrow " << a.name << ' ' << q.vertex_name(a.source) << ' '
            << q.vertex_name(a.target) << '\n';
    for (auto [a, b] : bq.relations())
        out << "rel " << q.arrow(a).name << ' ' << q.arrow(b).name << '\n';
    for (const auto& gen : bq.long_generators()) {
        out << "rel";
        for (int a : gen) out << ' ' << q.arrow(a).name;
        out << '\n';
    }
    return out.str();
}

StringWord parse_word(const BoundQuiver& bq, const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string token;
    std::optional<int> trivial;
    bool any = false;
    while (in >> token) {
        any = true;
        if (token.size() >= 4 && token.substr(0, 2) == "e(" && token.back() == ')') {
            std::string vname = token.substr(2, token.size() - 3);
            auto v = bq.quiver().vertex_index(vname);
            if (!v) throw std::invalid_argument("undeclared vertex in trivial string: " + vname);
            trivial = *v;
            continue;
        }
        bool inv = false;
        std::string name = token;
        if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
            inv = true;
            name = name.substr(0, name.size() - 3);
        } else if (name.size() > 1 && name.back() == '-') {
            inv = true;
            name.pop_back();
        }
        auto a = bq.quiver().arrow_index(name);
        if (!a) throw std::invalid_argument("undeclared arrow in word: " + name);
        letters.push_back({*a, inv});
    }
    if (!any) throw std::invalid_argument("empty word literal");
    if (trivial) {
        if (!letters.empty())
            throw std::invalid_argument("trivial string cannot be mixed with letters");
        return StringWord::trivial(*trivial);
    }
    return StringWord(std::move(letters));
}

std::string print_word(const BoundQuiver& bq, const StringWord& w) {
    if (w.is_trivial()) return "e(" + bq.quiver().vertex_name(w.trivial_vertex()) + ")";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += bq.quiver().arrow(l.arrow).name;
        if (l.inverse) out += "^-1";
    }
    return out;
}

}  // namespace gentle
