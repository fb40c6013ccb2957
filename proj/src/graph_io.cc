// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/graph_io.hh>

#include <json.hpp>

#include <sstream>

using std::istream;
using std::istringstream;
using std::map;
using std::ostringstream;
using std::string;
using std::to_string;

using nlohmann::ordered_json;

namespace covers
{
    namespace
    {
        auto parse_int(const string & token, int line) -> int
        {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            }
            catch (const std::exception &) {
                throw parse_error{"expected an integer, got '" + token + "'", line};
            }
            if (used != token.size())
                throw parse_error{"trailing characters after integer '" + token + "'", line};
            return value;
        }
    }

    auto parse_graph(istream & in) -> graph
    {
        string line;
        int line_number = 0;
        bool have_size = false;
        graph g{0};

        while (std::getline(in, line)) {
            ++line_number;
            istringstream fields{line};
            string directive;
            if (! (fields >> directive) || directive[0] == '#')
                continue;

            if (directive == "n") {
                if (have_size)
                    throw parse_error{"duplicate 'n' directive", line_number};
                string count;
                if (! (fields >> count))
                    throw parse_error{"'n' needs a vertex count", line_number};
                int n = parse_int(count, line_number);
                if (n < 0)
                    throw parse_error{"vertex count must be non-negative", line_number};
                g = graph{n};
                have_size = true;
            }
            else if (directive == "e") {
                if (! have_size)
                    throw parse_error{"'e' before 'n'", line_number};
                string u, v;
                if (! (fields >> u >> v))
                    throw parse_error{"'e' needs two endpoints", line_number};
                try {
                    g.add_edge(parse_int(u, line_number), parse_int(v, line_number));
                }
                catch (const parse_error &) {
                    throw;
                }
                catch (const input_error & error) {
                    throw parse_error{error.what(), line_number};
                }
            }
            else if (directive == "l") {
                if (! have_size)
                    throw parse_error{"'l' before 'n'", line_number};
                string v, tag;
                if (! (fields >> v >> tag))
                    throw parse_error{"'l' needs a vertex and a tag", line_number};
                try {
                    g.set_label(parse_int(v, line_number), tag);
                }
                catch (const parse_error &) {
                    throw;
                }
                catch (const input_error & error) {
                    throw parse_error{error.what(), line_number};
                }
            }
            else
                throw parse_error{"unknown directive '" + directive + "'", line_number};

            string excess;
            if (fields >> excess && excess[0] != '#')
                throw parse_error{"unexpected token '" + excess + "'", line_number};
        }

        if (! have_size)
            throw parse_error{"missing 'n' directive", line_number == 0 ? 1 : line_number};
        return g;
    }

    auto parse_graph(const string & text) -> graph
    {
        istringstream in{text};
        return parse_graph(in);
    }

    auto serialize_graph(const graph & g) -> string
    {
        ostringstream out;
        out << "n " << g.size() << "\n";
        for (auto & [u, v] : g.edges())
            out << "e " << u << " " << v << "\n";
        for (auto & [v, tag] : g.labels())
            out << "l " << v << " " << tag << "\n";
        return out.str();
    }

    auto parse_graph_json(const string & text) -> graph
    {
        ordered_json document;
        try {
            document = ordered_json::parse(text);
        }
        catch (const ordered_json::parse_error & error) {
            throw parse_error{string{"invalid JSON: "} + error.what()};
        }

        if (! document.is_object() || ! document.contains("n") || ! document["n"].is_number_integer())
            throw parse_error{"graph JSON needs an integer field 'n'"};

        graph g{document["n"].get<int>()};

        if (document.contains("edges")) {
            if (! document["edges"].is_array())
                throw parse_error{"'edges' must be an array of pairs"};
            for (auto & item : document["edges"]) {
                if (! item.is_array() || item.size() != 2
                        || ! item[0].is_number_integer() || ! item[1].is_number_integer())
                    throw parse_error{"each edge must be a pair of integers"};
                try {
                    g.add_edge(item[0].get<int>(), item[1].get<int>());
                }
                catch (const input_error & error) {
                    throw parse_error{error.what()};
                }
            }
        }

        if (document.contains("labels")) {
            if (! document["labels"].is_object())
                throw parse_error{"'labels' must be an object keyed by vertex"};
            for (auto & [key, value] : document["labels"].items()) {
                if (! value.is_string())
                    throw parse_error{"label values must be strings"};
                int v = 0;
                try {
                    std::size_t used = 0;
                    v = std::stoi(key, &used);
                    if (used != key.size())
                        throw std::invalid_argument{key};
                }
                catch (const std::exception &) {
                    throw parse_error{"label keys must be vertex numbers, got '" + key + "'"};
                }
                try {
                    g.set_label(v, value.get<string>());
                }
                catch (const input_error & error) {
                    throw parse_error{error.what()};
                }
            }
        }

        return g;
    }

    auto serialize_graph_json(const graph & g) -> string
    {
        ordered_json document;
        document["n"] = g.size();
        document["edges"] = ordered_json::array();
        for (auto & [u, v] : g.edges())
            document["edges"].push_back(ordered_json::array({u, v}));
        document["labels"] = ordered_json::object();
        for (auto & [v, tag] : g.labels())
            document["labels"][to_string(v)] = tag;
        return document.dump(2) + "\n";
    }

    auto parse_graph_auto(const string & text) -> graph
    {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            return c == '{' ? parse_graph_json(text) : parse_graph(text);
        }
        throw parse_error{"empty graph input"};
    }

    auto to_dot(const graph & g, const map<int, int> & colouring) -> string
    {
        static const char * const palette[] = {
            "gray90", "lightblue", "lightsalmon", "palegreen",
            "khaki", "plum", "lightcyan", "wheat",
        };
        constexpr int palette_size = int(sizeof(palette) / sizeof(palette[0]));

        ostringstream out;
        out << "graph g {\n";
        out << "  node [shape=circle];\n";
        for (int v = 0; v < g.size(); ++v) {
            out << "  " << v;
            string attributes;
            if (auto tag = g.label(v))
                attributes += "label=\"" + to_string(v) + ":" + *tag + "\"";
            if (auto found = colouring.find(v); found != colouring.end()) {
                if (! attributes.empty())
                    attributes += ", ";
                int index = found->second % palette_size;
                if (index < 0)
                    index += palette_size;
                attributes += string{"style=filled, fillcolor="} + palette[index];
            }
            if (! attributes.empty())
                out << " [" << attributes << "]";
            out << ";\n";
        }
        for (auto & [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}
