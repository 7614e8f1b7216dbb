// Copyright 2026 The drbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "commands.h"
#include "json_io.h"

namespace drbench::cli {

namespace fs = std::filesystem;

namespace {

struct Curve {
    std::string label;
    std::string protocol;
    int n = 0;
    double A = 0, B = 0, p = 1, r = 0, r_two_sigma = 0;
    std::vector<std::pair<int, double>> points;
};

const char *colour_for(int n) {
    static const char *palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return palette[((n % 10) + 10) % 10];
}

std::string fmt(const char *format, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, a);
    return buf;
}

std::vector<std::pair<int, double>> read_points(const fs::path &csv) {
    std::vector<std::pair<int, double>> out;
    if (!fs::exists(csv)) {
        return out;
    }
    std::stringstream in(read_text_file(csv.string()));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        int m = 0;
        double p = 0;
        if (std::sscanf(line.c_str(), "%d,%lf", &m, &p) == 2) {
            out.emplace_back(m, p);
        }
    }
    return out;
}

Curve curve_from(const json &j, const fs::path &dir, const std::string &label) {
    Curve c;
    c.label = label;
    c.protocol = j.value("protocol", std::string("DRB"));
    c.n = j.value("n", 0);
    c.A = j.value("A", 0.0);
    c.B = j.value("B", 0.0);
    c.p = j.value("p", 1.0);
    c.r = j.value("r", 0.0);
    if (j.contains("intervals") && j["intervals"].is_object()) {
        c.r_two_sigma = 2 * j["intervals"]["r"].value("sigma", 0.0);
    }
    if (j.contains("plot")) {
        c.points = read_points(dir / j["plot"].get<std::string>());
    }
    return c;
}

std::string render_svg(const std::vector<Curve> &curves) {
    const double W = 720, H = 480, left = 70, right = 220, top = 30, bottom = 60;
    const double pw = W - left - right, ph = H - top - bottom;
    int max_m = 1;
    for (const auto &c : curves) {
        for (const auto &[m, p] : c.points) {
            max_m = std::max(max_m, m);
        }
    }
    auto X = [&](double m) { return left + pw * m / max_m; };
    auto Y = [&](double p) { return top + ph * (1 - p); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << " " << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; k++) {
        double p = k / 4.0;
        s << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt("%.2f", Y(p)) << "\" x2=\"" << left << "\" y2=\""
          << fmt("%.2f", Y(p)) << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << left - 8 << "\" y=\"" << fmt("%.2f", Y(p) + 4) << "\" text-anchor=\"end\">"
          << fmt("%.2f", p) << "</text>\n";
    }
    for (int k = 0; k <= 5; k++) {
        double m = max_m * k / 5.0;
        s << "<line x1=\"" << fmt("%.2f", X(m)) << "\" y1=\"" << top + ph << "\" x2=\"" << fmt("%.2f", X(m))
          << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fmt("%.2f", X(m)) << "\" y=\"" << top + ph + 20 << "\" text-anchor=\"middle\">"
          << fmt("%.0f", m) << "</text>\n";
    }
    s << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">benchmark length m</text>\n";
    s << "<text x=\"20\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << top + ph / 2
      << ")\">success probability</text>\n";
    for (size_t k = 0; k < curves.size(); k++) {
        const Curve &c = curves[k];
        const char *colour = colour_for(c.n);
        s << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (int j = 0; j <= 100; j++) {
            double m = max_m * j / 100.0;
            double v = std::clamp(c.A + c.B * std::pow(c.p, m), 0.0, 1.0);
            s << (j ? " " : "") << fmt("%.2f", X(m)) << "," << fmt("%.2f", Y(v));
        }
        s << "\"/>\n";
        for (const auto &[m, p] : c.points) {
            s << "<circle cx=\"" << fmt("%.2f", X(m)) << "\" cy=\"" << fmt("%.2f", Y(p)) << "\" r=\"3\" fill=\""
              << colour << "\"/>\n";
        }
        double ly = top + 10 + 20 * k;
        s << "<line x1=\"" << W - right + 15 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 35 << "\" y2=\"" << ly
          << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << W - right + 40 << "\" y=\"" << ly + 4 << "\">n=" << c.n << " r="
          << fmt("%.4f", c.r) << " ± " << fmt("%.4f", c.r_two_sigma) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_table(const std::vector<Curve> &curves) {
    std::string out = "run                                       protocol  n   r          2sigma\n";
    char buf[512];
    for (const auto &c : curves) {
        std::snprintf(buf, sizeof buf, "%-41s %-8s %3d  %.6f   %.6f\n", c.label.c_str(), c.protocol.c_str(), c.n,
                      c.r, c.r_two_sigma);
        out += buf;
    }
    return out;
}

}  // namespace

int run_report(const ReportOptions &options, std::ostream &out, std::ostream &err) {
    std::vector<Curve> curves;
    for (const auto &run : options.runs) {
        fs::path path(run);
        if (fs::is_directory(path)) {
            path /= "results.json";
        }
        if (!fs::exists(path)) {
            err << "analysis error: " << path.string() << ": missing results (run analyze first)\n";
            return kAnalysisError;
        }
        json j;
        try {
            j = read_json_file(path.string());
        } catch (const std::exception &e) {
            err << "analysis error: " << e.what() << "\n";
            return kAnalysisError;
        }
        fs::path dir = path.parent_path();
        if (j.contains("runs")) {
            for (size_t k = 0; k < j["runs"].size(); k++) {
                curves.push_back(curve_from(j["runs"][k], dir, run + "#" + std::to_string(k)));
            }
        } else {
            curves.push_back(curve_from(j, dir, run));
        }
    }
    if (curves.empty()) {
        err << "analysis error: no results given\n";
        return kAnalysisError;
    }
    try {
        fs::path dir = options.out.empty() ? fs::path(".") : fs::path(options.out);
        fs::create_directories(dir);
        std::string table = render_table(curves);
        write_text_file((dir / "report.svg").string(), render_svg(curves));
        write_text_file((dir / "report.txt").string(), table);
        out << table;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kOk;
}

}  // namespace drbench::cli
