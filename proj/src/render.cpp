#include "hooktab/render.hpp"

namespace hooktab {

namespace {

unsigned digits(unsigned v) {
    unsigned d = 1;
    while (v >= 10) v /= 10, ++d;
    return d;
}

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

} // namespace

Partition inside_partition(const RectTableau& t) {
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= t.frame.r; ++i) {
        unsigned len = 0;
        while (len < t.frame.c && t.inside[i - 1][len]) ++len;
        parts.push_back(len);
    }
    return Partition::normalized(std::move(parts));
}

std::string render_ascii(const RectTableau& t) {
    const unsigned w = digits(t.frame.r + t.frame.c - 1);
    bool any_inside = false;
    for (const auto& row : t.inside)
        for (bool b : row) any_inside = any_inside || b;
    std::string out;
    for (unsigned i = 1; i <= t.frame.r; ++i) {
        std::string line;
        for (unsigned j = 1; j <= t.frame.c; ++j) {
            if (j > 1) line += ' ';
            std::string cell;
            if (t.is_hole(i, j)) {
                cell.assign(w - 1, ' ');
                cell += "\u00b7";
            } else {
                std::string v = std::to_string(t.at(i, j));
                cell.assign(w - v.size(), ' ');
                cell += v;
            }
            if (any_inside) cell += (!t.is_hole(i, j) && t.is_inside(i, j)) ? '*' : ' ';
            line += cell;
        }
        out += rstrip(std::move(line));
        out += '\n';
    }
    if (any_inside) out += "* = inside the partition\n";
    return out;
}

std::string render_latex(const RectTableau& t) {
    std::string out = "\\begin{tabular}{";
    for (unsigned j = 0; j < t.frame.c; ++j) out += 'r';
    out += "}\n";
    for (unsigned i = 1; i <= t.frame.r; ++i) {
        for (unsigned j = 1; j <= t.frame.c; ++j) {
            if (j > 1) out += " & ";
            if (t.is_hole(i, j))
                out += "$\\cdot$";
            else if (t.is_inside(i, j))
                out += "\\textbf{" + std::to_string(t.at(i, j)) + "}";
            else
                out += std::to_string(t.at(i, j));
        }
        out += " \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

json render_json(const RectTableau& t, const std::string& which) {
    json j;
    j["frame"] = {{"r", t.frame.r}, {"c", t.frame.c}};
    j["partition"] = inside_partition(t).parts();
    j["which"] = which;
    json grid = json::array();
    for (unsigned i = 1; i <= t.frame.r; ++i) {
        json row = json::array();
        for (unsigned j2 = 1; j2 <= t.frame.c; ++j2) {
            if (t.is_hole(i, j2))
                row.push_back(nullptr);
            else
                row.push_back(t.at(i, j2));
        }
        grid.push_back(std::move(row));
    }
    j["grid"] = std::move(grid);
    json inside = json::array();
    for (unsigned i = 1; i <= t.frame.r; ++i) {
        json row = json::array();
        for (unsigned j2 = 1; j2 <= t.frame.c; ++j2) row.push_back(t.is_inside(i, j2));
        inside.push_back(std::move(row));
    }
    j["inside"] = std::move(inside);
    if (t.hole) j["addbox"] = {t.hole->i, t.hole->j};
    return j;
}

RectTableau tableau_from_json(const json& j) {
    Frame frame(j.at("frame").at("r").get<unsigned>(), j.at("frame").at("c").get<unsigned>());
    RectTableau t{frame,
                  std::vector<std::vector<unsigned>>(frame.r, std::vector<unsigned>(frame.c, 0)),
                  std::vector<std::vector<bool>>(frame.r, std::vector<bool>(frame.c, false)),
                  std::nullopt};
    if (j.contains("addbox"))
        t.hole = Box{j.at("addbox").at(0).get<unsigned>(), j.at("addbox").at(1).get<unsigned>()};
    const auto& grid = j.at("grid");
    const auto& inside = j.at("inside");
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j2 = 1; j2 <= frame.c; ++j2) {
            const auto& cell = grid.at(i - 1).at(j2 - 1);
            if (!cell.is_null()) t.grid[i - 1][j2 - 1] = cell.get<unsigned>();
            t.inside[i - 1][j2 - 1] = inside.at(i - 1).at(j2 - 1).get<bool>();
        }
    return t;
}

} // namespace hooktab
