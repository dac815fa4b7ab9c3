#include "polyred/labels.hpp"

#include "polyred/errors.hpp"

#include <cctype>
#include <charconv>

namespace polyred {

namespace {

std::string join(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(xs[k]);
    }
    return out;
}

struct Render {
    std::string operator()(const BqpDiag& l) const { return "x(" + join({l.i, l.i}) + ")"; }
    std::string operator()(const BqpOff& l) const { return "x(" + join({l.i, l.j}) + ")"; }
    std::string operator()(const CutEdge& l) const { return "cut(" + join({l.i, l.j}) + ")"; }
    std::string operator()(const Node& l) const { return "node(" + l.name + ")"; }
    std::string operator()(const Column& l) const { return "col(" + std::to_string(l.j) + ")"; }
    std::string operator()(const Slack& l) const { return "slack(" + l.tag + ":" + join(l.indices) + ")"; }
    std::string operator()(const Triple& l) const { return "t(" + join({l.s, l.t, l.u}) + ")"; }
    std::string operator()(const Tuple& l) const { return "a(" + join(l.indices) + ")"; }
    std::string operator()(const OrdPair& l) const { return "y(" + join({l.i, l.j}) + ")"; }
    std::string operator()(const Cell& l) const { return "cell(" + join({l.i, l.j}) + ")"; }
    std::string operator()(const QuadPair& l) const
    {
        return "z(" + l.factors.at(0).str() + ";" + l.factors.at(1).str() + ")";
    }
};

[[noreturn]] void malformed(std::string_view text)
{
    throw ValidationError("malformed coordinate label '" + std::string(text) + "'");
}

std::vector<int> parse_ints(std::string_view body, std::string_view whole)
{
    std::vector<int> out;
    if (body.empty())
        malformed(whole);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        auto piece = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
            malformed(whole);
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

bool valid_name(std::string_view name)
{
    if (name.empty())
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '~' || c == '-'))
            return false;
    return true;
}

} // namespace

std::string CoordLabel::str() const
{
    return std::visit(Render{}, value);
}

CoordLabel quad(const CoordLabel& first, const CoordLabel& second)
{
    return CoordLabel{QuadPair{{first, second}}};
}

CoordLabel CoordLabel::parse(std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        malformed(text);
    auto head = text.substr(0, open);
    auto body = text.substr(open + 1, text.size() - open - 2);

    if (head == "z") {
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t k = 0; k < body.size(); ++k) {
            if (body[k] == '(')
                ++depth;
            else if (body[k] == ')')
                --depth;
            else if (body[k] == ';' && depth == 0) {
                if (split != std::string_view::npos)
                    malformed(text);
                split = k;
            }
        }
        if (split == std::string_view::npos)
            malformed(text);
        return quad(parse(body.substr(0, split)), parse(body.substr(split + 1)));
    }
    if (head == "node") {
        if (!valid_name(body))
            malformed(text);
        return CoordLabel{Node{std::string(body)}};
    }
    if (head == "slack") {
        auto colon = body.find(':');
        if (colon == std::string_view::npos || !valid_name(body.substr(0, colon)))
            malformed(text);
        return CoordLabel{Slack{std::string(body.substr(0, colon)), parse_ints(body.substr(colon + 1), text)}};
    }

    auto ints = parse_ints(body, text);
    auto arity = [&](std::size_t k) {
        if (ints.size() != k)
            malformed(text);
    };
    if (head == "x") {
        arity(2);
        if (ints[0] == ints[1])
            return CoordLabel{BqpDiag{ints[0]}};
        if (ints[0] > ints[1])
            malformed(text);
        return CoordLabel{BqpOff{ints[0], ints[1]}};
    }
    if (head == "cut") {
        arity(2);
        return CoordLabel{CutEdge{ints[0], ints[1]}};
    }
    if (head == "col") {
        arity(1);
        return CoordLabel{Column{ints[0]}};
    }
    if (head == "t") {
        arity(3);
        return CoordLabel{Triple{ints[0], ints[1], ints[2]}};
    }
    if (head == "a")
        return CoordLabel{Tuple{ints}};
    if (head == "y") {
        arity(2);
        return CoordLabel{OrdPair{ints[0], ints[1]}};
    }
    if (head == "cell") {
        arity(2);
        return CoordLabel{Cell{ints[0], ints[1]}};
    }
    malformed(text);
}

} // namespace polyred
