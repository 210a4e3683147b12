#include "locdim/dsl.hpp"

#include <cctype>
#include <sstream>

namespace locdim::dsl {

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBrace, RBrace, LBracket, RBracket,
                 Comma, Semicolon, Dash, Equals, At, End };

struct Token {
    Tok kind;
    std::string text;
    int value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        current_ = {Tok::End, "", 0, line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            current_.kind = Tok::Ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = 0;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                step();
            }
            current_.kind = Tok::Int;
            current_.value = v;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        switch (c) {
            case '(': current_.kind = Tok::LParen; break;
            case ')': current_.kind = Tok::RParen; break;
            case '{': current_.kind = Tok::LBrace; break;
            case '}': current_.kind = Tok::RBrace; break;
            case '[': current_.kind = Tok::LBracket; break;
            case ']': current_.kind = Tok::RBracket; break;
            case ',': current_.kind = Tok::Comma; break;
            case ';': current_.kind = Tok::Semicolon; break;
            case '-': current_.kind = Tok::Dash; break;
            case '=': current_.kind = Tok::Equals; break;
            case '@': current_.kind = Tok::At; break;
            default:
                throw SyntaxError(line_, col_, "a valid token, found '" + std::string(1, c) + "'");
        }
        current_.text = std::string(1, c);
        step();
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    NodePtr parse_top() {
        auto node = parse_expr();
        expect(Tok::End, "end of input");
        return node;
    }

private:
    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind)
            throw SyntaxError(lex_.peek().line, lex_.peek().col, what);
        return lex_.take();
    }

    int expect_int() { return expect(Tok::Int, "an integer").value; }

    void expect_keyword(const std::string& name) {
        auto t = expect(Tok::Ident, "'" + name + "='");
        if (t.text != name) throw SyntaxError(t.line, t.col, "'" + name + "='");
        expect(Tok::Equals, "'='");
    }

    NodePtr parse_expr() {
        auto t = expect(Tok::Ident, "an expression");
        if (t.text == "K" || t.text == "P" || t.text == "C") return parse_atom(t);
        if (t.text == "graph") return parse_inline_graph();
        if (t.text == "join" || t.text == "union") return parse_binary(t.text);
        if (t.text == "rooted") return parse_rooted();
        if (t.text == "corona") return parse_corona();
        if (t.text == "bouquet") return parse_bouquet();
        if (t.text == "chain") return parse_chain();
        if (t.text == "attach") return parse_attach();
        throw UnknownIdentifierError(t.text, t.line, t.col);
    }

    NodePtr parse_atom(const Token& name) {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->kind = Kind::Atom;
        node->family = name.text[0];
        node->order = expect_int();
        expect(Tok::RParen, "')'");
        return node;
    }

    NodePtr parse_inline_graph() {
        expect(Tok::LBrace, "'{'");
        expect_keyword("n");
        auto node = std::make_shared<Node>();
        node->kind = Kind::InlineGraph;
        node->n = expect_int();
        expect(Tok::Semicolon, "';'");
        while (lex_.peek().kind == Tok::Int) {
            int u = expect_int();
            expect(Tok::Dash, "'-'");
            int v = expect_int();
            node->edges.emplace_back(u, v);
        }
        expect(Tok::RBrace, "'}'");
        return node;
    }

    NodePtr parse_binary(const std::string& name) {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->kind = name == "join" ? Kind::Join : Kind::Union;
        node->children.push_back(parse_expr());
        expect(Tok::Comma, "','");
        node->children.push_back(parse_expr());
        expect(Tok::RParen, "')'");
        return node;
    }

    NodePtr parse_rooted() {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->children.push_back(parse_expr());
        expect(Tok::Comma, "','");
        if (lex_.peek().kind == Tok::LBracket) {
            node->kind = Kind::Rooted;
            lex_.take();
            while (true) {
                node->children.push_back(parse_expr());
                expect(Tok::At, "'@'");
                node->roots.push_back(expect_int());
                if (lex_.peek().kind != Tok::Comma) break;
                lex_.take();
            }
            expect(Tok::RBracket, "']'");
        } else {
            node->kind = Kind::RootedUniform;
            node->children.push_back(parse_expr());
            expect(Tok::At, "'@'");
            node->roots.push_back(expect_int());
        }
        expect(Tok::RParen, "')'");
        return node;
    }

    NodePtr parse_corona() {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->children.push_back(parse_expr());
        expect(Tok::Comma, "','");
        if (lex_.peek().kind == Tok::LBracket) {
            node->kind = Kind::Corona;
            lex_.take();
            while (true) {
                node->children.push_back(parse_expr());
                if (lex_.peek().kind != Tok::Comma) break;
                lex_.take();
            }
            expect(Tok::RBracket, "']'");
        } else {
            node->kind = Kind::CoronaUniform;
            node->children.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        return node;
    }

    std::vector<NodePtr> parse_part_list() {
        expect(Tok::LBracket, "'['");
        std::vector<NodePtr> parts;
        while (true) {
            parts.push_back(parse_expr());
            if (lex_.peek().kind != Tok::Comma) break;
            lex_.take();
        }
        expect(Tok::RBracket, "']'");
        return parts;
    }

    std::pair<int, int> parse_int_pair() {
        expect(Tok::LParen, "'('");
        int a = expect_int();
        expect(Tok::Comma, "','");
        int b = expect_int();
        expect(Tok::RParen, "')'");
        return {a, b};
    }

    NodePtr parse_bouquet() {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->kind = Kind::Bouquet;
        node->children = parse_part_list();
        expect(Tok::Comma, "','");
        expect_keyword("roots");
        expect(Tok::LBracket, "'['");
        while (true) {
            node->roots.push_back(expect_int());
            if (lex_.peek().kind != Tok::Comma) break;
            lex_.take();
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::RParen, "')'");
        if (node->roots.size() != node->children.size())
            throw ArityError("bouquet needs one root per part");
        return node;
    }

    NodePtr parse_chain() {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->kind = Kind::Chain;
        node->children = parse_part_list();
        expect(Tok::Comma, "','");
        expect_keyword("links");
        expect(Tok::LBracket, "'['");
        while (true) {
            node->links.push_back(parse_int_pair());
            if (lex_.peek().kind != Tok::Comma) break;
            lex_.take();
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::RParen, "')'");
        if (node->links.size() + 1 != node->children.size())
            throw ArityError("chain needs one link per junction");
        return node;
    }

    NodePtr parse_attach() {
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<Node>();
        node->kind = Kind::Attach;
        node->children = parse_part_list();
        expect(Tok::Comma, "','");
        expect_keyword("ids");
        expect(Tok::LBracket, "'['");
        while (true) {
            expect(Tok::LParen, "'('");
            auto a = parse_int_pair();
            expect(Tok::Comma, "','");
            auto b = parse_int_pair();
            expect(Tok::RParen, "')'");
            node->ids.push_back({a.first, a.second, b.first, b.second});
            if (lex_.peek().kind != Tok::Comma) break;
            lex_.take();
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::RParen, "')'");
        if (node->ids.size() + 1 != node->children.size())
            throw ArityError("attach needs one identification per part after the first");
        return node;
    }

    Lexer lex_;
};

void format_node(const NodePtr& node, std::ostringstream& out) {
    auto list = [&](auto begin, auto end, auto&& each) {
        out << '[';
        for (auto it = begin; it != end; ++it) {
            if (it != begin) out << ", ";
            each(*it);
        }
        out << ']';
    };
    switch (node->kind) {
        case Kind::Atom:
            out << node->family << '(' << node->order << ')';
            break;
        case Kind::InlineGraph:
            out << "graph{n=" << node->n << ';';
            for (auto [u, v] : node->edges) out << ' ' << u << '-' << v;
            out << '}';
            break;
        case Kind::Join:
        case Kind::Union:
            out << (node->kind == Kind::Join ? "join(" : "union(");
            format_node(node->children[0], out);
            out << ", ";
            format_node(node->children[1], out);
            out << ')';
            break;
        case Kind::RootedUniform:
            out << "rooted(";
            format_node(node->children[0], out);
            out << ", ";
            format_node(node->children[1], out);
            out << '@' << node->roots[0] << ')';
            break;
        case Kind::Rooted: {
            out << "rooted(";
            format_node(node->children[0], out);
            out << ", [";
            for (size_t i = 1; i < node->children.size(); ++i) {
                if (i > 1) out << ", ";
                format_node(node->children[i], out);
                out << '@' << node->roots[i - 1];
            }
            out << "])";
            break;
        }
        case Kind::CoronaUniform:
            out << "corona(";
            format_node(node->children[0], out);
            out << ", ";
            format_node(node->children[1], out);
            out << ')';
            break;
        case Kind::Corona: {
            out << "corona(";
            format_node(node->children[0], out);
            out << ", [";
            for (size_t i = 1; i < node->children.size(); ++i) {
                if (i > 1) out << ", ";
                format_node(node->children[i], out);
            }
            out << "])";
            break;
        }
        case Kind::Bouquet:
            out << "bouquet(";
            list(node->children.begin(), node->children.end(),
                 [&](const NodePtr& c) { format_node(c, out); });
            out << ", roots=";
            list(node->roots.begin(), node->roots.end(), [&](int r) { out << r; });
            out << ')';
            break;
        case Kind::Chain:
            out << "chain(";
            list(node->children.begin(), node->children.end(),
                 [&](const NodePtr& c) { format_node(c, out); });
            out << ", links=";
            list(node->links.begin(), node->links.end(), [&](const std::pair<int, int>& l) {
                out << '(' << l.first << ", " << l.second << ')';
            });
            out << ')';
            break;
        case Kind::Attach:
            out << "attach(";
            list(node->children.begin(), node->children.end(),
                 [&](const NodePtr& c) { format_node(c, out); });
            out << ", ids=";
            list(node->ids.begin(), node->ids.end(), [&](const Identification& id) {
                out << "((" << id.part_a << ", " << id.vertex_a << "), (" << id.part_b << ", "
                    << id.vertex_b << "))";
            });
            out << ')';
            break;
    }
}

AttachmentMeta identity_meta(const Graph& g) {
    AttachmentMeta meta;
    meta.origins.assign(static_cast<size_t>(g.order()), {});
    meta.part_maps.assign(1, std::vector<int>(static_cast<size_t>(g.order())));
    for (int v = 0; v < g.order(); ++v) {
        meta.origins[static_cast<size_t>(v)] = {{0, v}};
        meta.part_maps[0][static_cast<size_t>(v)] = v;
    }
    return meta;
}

}  // namespace

bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->family != b->family || a->order != b->order || a->n != b->n ||
        a->edges != b->edges || a->roots != b->roots || a->links != b->links || a->ids != b->ids)
        return false;
    if (a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
    return true;
}

NodePtr parse(std::string_view text) { return Parser(text).parse_top(); }

std::string format(const NodePtr& ast) {
    std::ostringstream out;
    format_node(ast, out);
    return out.str();
}

EvalResult eval(const NodePtr& ast) {
    switch (ast->kind) {
        case Kind::Atom: {
            Graph g = ast->family == 'K'   ? Graph::complete(ast->order)
                      : ast->family == 'P' ? Graph::path(ast->order)
                                           : Graph::cycle(ast->order);
            auto meta = identity_meta(g);
            return {std::move(g), std::move(meta)};
        }
        case Kind::InlineGraph: {
            Graph g = Graph::from_edge_list(ast->n, ast->edges);
            auto meta = identity_meta(g);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Join: {
            Graph g = join(eval(ast->children[0]).graph, eval(ast->children[1]).graph);
            auto meta = identity_meta(g);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Union: {
            Graph g = disjoint_union(eval(ast->children[0]).graph, eval(ast->children[1]).graph);
            auto meta = identity_meta(g);
            return {std::move(g), std::move(meta)};
        }
        case Kind::RootedUniform: {
            Graph base = eval(ast->children[0]).graph;
            Graph factor = eval(ast->children[1]).graph;
            auto [g, meta] =
                rooted_product(RootedSpec::uniform(std::move(base), factor, ast->roots[0]));
            return {std::move(g), std::move(meta)};
        }
        case Kind::Rooted: {
            RootedSpec spec;
            spec.base = eval(ast->children[0]).graph;
            for (size_t i = 1; i < ast->children.size(); ++i)
                spec.factors.push_back(eval(ast->children[i]).graph);
            spec.roots = ast->roots;
            auto [g, meta] = rooted_product(spec);
            return {std::move(g), std::move(meta)};
        }
        case Kind::CoronaUniform: {
            Graph base = eval(ast->children[0]).graph;
            Graph factor = eval(ast->children[1]).graph;
            std::vector<Graph> factors(static_cast<size_t>(base.order()), factor);
            auto [g, meta] = corona(base, factors);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Corona: {
            Graph base = eval(ast->children[0]).graph;
            std::vector<Graph> factors;
            for (size_t i = 1; i < ast->children.size(); ++i)
                factors.push_back(eval(ast->children[i]).graph);
            auto [g, meta] = corona(base, factors);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Bouquet: {
            std::vector<Graph> parts;
            for (const auto& c : ast->children) parts.push_back(eval(c).graph);
            auto [g, meta] = bouquet(parts, ast->roots);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Chain: {
            ChainSpec spec;
            for (const auto& c : ast->children) spec.parts.push_back(eval(c).graph);
            spec.links = ast->links;
            auto [g, meta] = chain(spec);
            return {std::move(g), std::move(meta)};
        }
        case Kind::Attach: {
            std::vector<Graph> parts;
            for (const auto& c : ast->children) parts.push_back(eval(c).graph);
            auto [g, meta] = point_attach(parts, ast->ids);
            return {std::move(g), std::move(meta)};
        }
    }
    throw Error("unreachable AST kind");
}

}  // namespace locdim::dsl
