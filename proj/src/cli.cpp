#include "rook/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rook/essential.hpp"
#include "rook/necklace.hpp"
#include "rook/render.hpp"
#include "rook/rook_matroid.hpp"
#include "rook/sorting.hpp"

namespace rook::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ElemSet parse_set_arg(const std::string& text) {
    ElemSet out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("invalid set \"" + text + "\"");
        out = out.with(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string join_commas(const ElemSet& s) {
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out += ",";
        out += std::to_string(e);
    }
    return out;
}

void cmd_shape(std::ostream& out, const std::string& spec, bool corners, bool render) {
    SkewShape shape = parse_shape(spec);
    out << "shape " << shape.to_string() << "\n";
    out << "rows " << shape.rows() << " cols " << shape.cols() << " cells " << shape.cell_count()
        << " ground " << shape.ground_size() << "\n";
    if (shape.all_rows_cols_nonempty())
        out << "connected " << (is_connected_shape(shape) ? "yes" : "no") << "\n";
    if (corners) {
        out << "inner corners:";
        for (const Corner& c : inner_corners(shape)) out << " (" << c.row << "," << c.col << ")";
        out << "\n";
        out << "outer corners:";
        for (const Corner& c : outer_corners(shape)) out << " (" << c.row << "," << c.col << ")";
        out << "\n";
    }
    if (render) out << ascii_shape(shape);
}

void cmd_enumerate(std::ostream& out, const std::string& spec, bool count_only) {
    SkewShape shape = parse_shape(spec);
    std::vector<Placement> placements = enumerate_non_nesting(shape);
    if (count_only) {
        out << placements.size() << "\n";
        return;
    }
    for (const Placement& rho : placements) out << join_spaces(encode(shape, rho)) << "\n";
}

void cmd_necklace(std::ostream& out, const std::string& spec) {
    out << to_text(grassmann_necklace(parse_shape(spec)));
}

void cmd_classify(std::ostream& out, const std::string& path) {
    GrassmannNecklace gn = parse_necklace(read_file(path));
    Classification result = classify(gn);
    if (result.accepted())
        out << "ROOK " << result.shape->to_string() << "\n";
    else
        out << "NOT-ROOK condition=" << to_string(result.rejection->reason) << " witness="
            << result.rejection->witness << "\n";
}

void cmd_sort_check(std::ostream& out, const std::string& spec) {
    RookMatroid rm = RookMatroid::build(parse_shape(spec));
    if (auto ce = verify_sort_closed(rm))
        out << "COUNTEREXAMPLE I=" << join_commas(ce->i_set) << " J=" << join_commas(ce->j_set)
            << " (" << ce->what << ")\n";
    else
        out << "OK\n";
}

void cmd_uncross(std::ostream& out, const std::string& spec, const std::string& i_text,
                 const std::string& j_text) {
    SkewShape shape = parse_shape(spec);
    ElemSet i_set = parse_set_arg(i_text), j_set = parse_set_arg(j_text);
    Placement rho1 = decode(shape, i_set), rho2 = decode(shape, j_set);
    DoublePlacement initial;
    for (const Cell& c : rho1) initial.rooks.push_back({c, RookColor::White});
    for (const Cell& c : rho2) initial.rooks.push_back({c, RookColor::Black});
    std::sort(initial.rooks.begin(), initial.rooks.end());
    out << "I = " << to_string(i_set) << "\n";
    out << "J = " << to_string(j_set) << "\n";
    out << "rho1 u rho2:\n" << ascii_double(shape, initial);
    DoublePlacement z = uncross(shape, rho1, rho2);
    out << "Z = uncross(rho1, rho2):\n" << ascii_double(shape, z);
    NumberedUncrossing y = number_uncrossing(z);
    out << "numbering:\n" << describe_numbering(y);
    auto [sort1, sort2] = sort_pair(i_set, j_set);
    out << "odd encodes " << join_commas(encode(shape, odd_rooks(y))) << "\n";
    out << "even encodes " << join_commas(encode(shape, even_rooks(y))) << "\n";
    out << "sort1 = " << join_commas(sort1) << "\n";
    out << "sort2 = " << join_commas(sort2) << "\n";
}

void cmd_essential(std::ostream& out, const std::string& spec) {
    RookMatroid rm = RookMatroid::build(parse_shape(spec));
    for (const RankedEssentialSet& member : essential_family(rm.matroid()))
        out << "(" << member.rank << ", " << to_string(member.interval) << ") "
            << (member.connected ? "connected" : "disconnected") << "\n";
}

void cmd_polytope(std::ostream& out, const std::string& spec, const std::string& format) {
    HRep hrep = polytope_hrep(parse_shape(spec));
    if (format == "ine")
        out << to_ine(hrep);
    else if (format == "plain")
        out << to_plain(hrep);
    else
        throw UsageError("unknown format \"" + format + "\"");
}

void cmd_verify(std::ostream& out, const std::string& path) {
    Board board = parse_board(read_file(path));
    auto result = is_matroid_board(board);
    if (std::holds_alternative<Matroid>(result)) {
        out << "MATROID\n";
    } else {
        const auto& ce = std::get<ExchangeCounterexample>(result);
        out << "NOT-MATROID B1=" << to_string(ce.b1) << " B2=" << to_string(ce.b2)
            << " a=" << ce.a << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rook matroids on skew Ferrers boards"};
    app.require_subcommand(1);

    std::string spec, file, i_text, j_text, format = "ine";
    bool corners = false, render = false, count_only = false;

    CLI::App* shape_cmd = app.add_subcommand("shape", "dimensions, corners, ASCII board");
    shape_cmd->add_option("spec", spec)->required();
    shape_cmd->add_flag("--corners", corners);
    shape_cmd->add_flag("--render", render);

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "encoded bases of the rook matroid");
    enum_cmd->add_option("spec", spec)->required();
    enum_cmd->add_flag("--count", count_only);

    CLI::App* necklace_cmd = app.add_subcommand("necklace", "Grassmann necklace of a shape");
    necklace_cmd->add_option("spec", spec)->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "decide whether a necklace is rook");
    classify_cmd->add_option("file", file)->required();

    CLI::App* sort_cmd = app.add_subcommand("sort-check", "verify sort-closure of all basis pairs");
    sort_cmd->add_option("spec", spec)->required();

    CLI::App* uncross_cmd = app.add_subcommand("uncross", "uncross two bases and show the numbering");
    uncross_cmd->add_option("spec", spec)->required();
    uncross_cmd->add_option("--I", i_text)->required();
    uncross_cmd->add_option("--J", j_text)->required();

    CLI::App* essential_cmd = app.add_subcommand("essential", "ranked essential sets");
    essential_cmd->add_option("spec", spec)->required();

    CLI::App* polytope_cmd = app.add_subcommand("polytope", "matroid polytope H-representation");
    polytope_cmd->add_option("spec", spec)->required();
    polytope_cmd->add_option("--format", format)->check(CLI::IsMember({"ine", "plain"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "basis exchange over a board's placements");
    verify_cmd->add_option("boardfile", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (shape_cmd->parsed()) cmd_shape(out, spec, corners, render);
        else if (enum_cmd->parsed()) cmd_enumerate(out, spec, count_only);
        else if (necklace_cmd->parsed()) cmd_necklace(out, spec);
        else if (classify_cmd->parsed()) cmd_classify(out, file);
        else if (sort_cmd->parsed()) cmd_sort_check(out, spec);
        else if (uncross_cmd->parsed()) cmd_uncross(out, spec, i_text, j_text);
        else if (essential_cmd->parsed()) cmd_essential(out, spec);
        else if (polytope_cmd->parsed()) cmd_polytope(out, spec, format);
        else if (verify_cmd->parsed()) cmd_verify(out, file);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rook::cli
