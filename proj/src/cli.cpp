#include "tuplerank/cli.hpp"

#include "tuplerank/rank_codec.hpp"
#include "tuplerank/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tuplerank::cli {

namespace {

enum class Format { plain, csv, jsonl };

struct Cell {
    Rank rank;
    std::size_t row;
    std::size_t col;
};

std::vector<Cell> grid_cells(std::size_t rows, std::size_t cols) {
    std::vector<Cell> cells;
    cells.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            cells.push_back({psi(Tuple{Integer(r), Integer(c)}), r, c});
        }
    }
    return cells;
}

void write_record(std::ostream& out, Format format, const Rank& rank, const Tuple& t) {
    switch (format) {
    case Format::plain:
        out << to_decimal(rank) << ':';
        for (const auto& c : t.coords()) {
            out << ' ' << to_decimal(c);
        }
        out << '\n';
        break;
    case Format::csv:
        out << to_decimal(rank);
        for (const auto& c : t.coords()) {
            out << ',' << to_decimal(c);
        }
        out << '\n';
        break;
    case Format::jsonl: {
        nlohmann::ordered_json record;
        record["rank"] = to_decimal(rank);
        record["k"] = t.size();
        auto tuple = nlohmann::json::array();
        for (const auto& c : t.coords()) {
            tuple.push_back(to_decimal(c));
        }
        record["tuple"] = std::move(tuple);
        out << record.dump() << '\n';
        break;
    }
    }
}

}  // namespace

std::string render_grid(std::size_t rows, std::size_t cols) {
    const auto cells = grid_cells(rows, cols);
    std::size_t width = 1;
    for (const auto& cell : cells) {
        width = std::max(width, to_decimal(cell.rank).size());
    }
    std::string out;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto label = to_decimal(cells[r * cols + c].rank);
            if (c != 0) {
                out += ' ';
            }
            out.append(width - label.size(), ' ');
            out += label;
        }
        out += '\n';
    }
    return out;
}

std::string render_grid_svg(std::size_t rows, std::size_t cols) {
    constexpr int kPitch = 60;
    constexpr int kMargin = 40;
    auto cells = grid_cells(rows, cols);
    const auto x_of = [&](std::size_t c) { return kMargin + static_cast<int>(c) * kPitch; };
    const auto y_of = [&](std::size_t r) { return kMargin + static_cast<int>(r) * kPitch; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << 2 * kMargin + static_cast<int>(cols - 1) * kPitch << "\" height=\""
        << 2 * kMargin + static_cast<int>(rows - 1) * kPitch << "\">\n"
        << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
           "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#555\"/></marker></defs>\n";

    for (const auto& cell : cells) {
        svg << "<text x=\"" << x_of(cell.col) << "\" y=\"" << y_of(cell.row)
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"monospace\" "
               "font-size=\"14\">"
            << to_decimal(cell.rank) << "</text>\n";
    }

    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.rank < b.rank; });
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const auto& from = cells[i - 1];
        const auto& to = cells[i];
        // Stop short of the label centres so the arrowheads stay visible.
        const int x1 = x_of(from.col), y1 = y_of(from.row);
        const int x2 = x_of(to.col), y2 = y_of(to.row);
        const int dx = x2 - x1, dy = y2 - y1;
        const double len = std::max(1.0, std::sqrt(static_cast<double>(dx * dx + dy * dy)));
        const double trim = 14.0 / len;
        svg << "<line x1=\"" << x1 + dx * trim << "\" y1=\"" << y1 + dy * trim << "\" x2=\"" << x2 - dx * trim
            << "\" y2=\"" << y2 - dy * trim << "\" stroke=\"#555\" stroke-width=\"1.5\" "
            << "marker-end=\"url(#arrow)\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bijections between k-tuples of naturals and naturals", "tuplerank"};
    app.require_subcommand(1);

    std::size_t k = 2;
    std::vector<std::string> coords;
    auto* encode = app.add_subcommand("encode", "Print the rank of a k-tuple");
    encode->add_option("-k,--dim", k, "Dimension")->required();
    encode->add_option("coords", coords, "Coordinates, nonnegative decimals")->required();

    std::string rank_text;
    auto* decode = app.add_subcommand("decode", "Print the k-tuple at a rank");
    decode->add_option("-k,--dim", k, "Dimension")->required();
    decode->add_option("rank", rank_text, "Rank, nonnegative decimal")->required();

    std::size_t count = 10;
    std::string format_name = "plain";
    std::string space_name = "full";
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"csv", Format::csv}, {"jsonl", Format::jsonl}};
    const std::map<std::string, Space> spaces{{"full", Space::full_space}, {"cone", Space::monotone_cone}};
    auto* enumerate = app.add_subcommand("enumerate", "Stream tuples in rank order");
    enumerate->add_option("-k,--dim", k, "Dimension")->required();
    enumerate->add_option("--count", count, "Number of records")->check(CLI::PositiveNumber);
    enumerate->add_option("--format", format_name, "plain, csv or jsonl")->check(CLI::IsMember(formats));
    enumerate->add_option("--space", space_name, "full (all tuples) or cone (monotone tuples)")
        ->check(CLI::IsMember(spaces));

    std::size_t rows = 5;
    std::size_t cols = 5;
    std::string svg_path;
    auto* grid = app.add_subcommand("grid", "Print the k=2 rank lattice");
    grid->add_option("--rows", rows, "Rows (first coordinate)")->check(CLI::PositiveNumber);
    grid->add_option("--cols", cols, "Columns (second coordinate)")->check(CLI::PositiveNumber);
    grid->add_option("--svg", svg_path, "Also write an SVG drawing to this path");

    std::size_t k_max = 3;
    std::size_t selftest_count = 1000;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "Check the bijection properties");
    selftest->add_option("--k-max", k_max, "Largest dimension to check")->check(CLI::PositiveNumber);
    selftest->add_option("--count", selftest_count, "Ranks checked per dimension")->check(CLI::PositiveNumber);
    selftest->add_flag("--inject-fault", inject_fault)->group("");

    std::vector<const char*> argv{"tuplerank"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "tuplerank: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*encode) {
            const Dimension dim(k);
            if (coords.size() != dim.value()) {
                err << "tuplerank: expected " << dim.value() << " coordinates, got " << coords.size() << '\n';
                return kExitUsage;
            }
            std::vector<Integer> values;
            values.reserve(coords.size());
            for (const auto& c : coords) {
                values.push_back(parse_natural(c));
            }
            out << to_decimal(psi(Tuple(std::move(values)))) << '\n';
        } else if (*decode) {
            const Tuple t = unrank_psi(parse_natural(rank_text), Dimension(k));
            for (std::size_t i = 0; i < t.size(); ++i) {
                out << (i ? " " : "") << to_decimal(t[i]);
            }
            out << '\n';
        } else if (*enumerate) {
            const Dimension dim(k);
            const Format format = formats.at(format_name);
            if (format == Format::csv) {
                out << "rank";
                for (std::size_t i = 1; i <= dim.value(); ++i) {
                    out << ",n" << i;
                }
                out << '\n';
            }
            Enumerator stream(dim, spaces.at(space_name));
            for (std::size_t i = 0; i < count; ++i, stream.advance()) {
                write_record(out, format, stream.index(), stream.current());
            }
        } else if (*grid) {
            if (!svg_path.empty()) {
                std::ofstream file(svg_path, std::ios::binary);
                file << render_grid_svg(rows, cols);
                file.close();
                if (!file) {
                    err << "tuplerank: cannot write '" << svg_path << "'\n";
                    return kExitUsage;
                }
            }
            out << render_grid(rows, cols);
        } else if (*selftest) {
            const auto results = run_selftest({Dimension(k_max), selftest_count, inject_fault});
            bool all_passed = true;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
                if (!r.passed && all_passed) {
                    err << "counterexample (" << r.name << "): " << r.counterexample << '\n';
                }
                all_passed = all_passed && r.passed;
            }
            return all_passed ? kExitOk : kExitPropertyFailure;
        }
    } catch (const std::invalid_argument& e) {
        err << "tuplerank: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace tuplerank::cli
