#include "parabifurc/config.hpp"

#include <fstream>
#include <sstream>

#include "parabifurc/errors.hpp"
#include "parabifurc/report_io.hpp"

namespace parabifurc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" + v + "'");
    }
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-integer value '" + v + "'");
    }
}

std::vector<long> parse_long_list(const std::string& key, const std::string& v) {
    std::vector<long> out;
    for (const auto& item : split(v, ',')) out.push_back(parse_long(key, item));
    return out;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split(v, ',')) out.push_back(parse_double(key, item));
    return out;
}

std::complex<double> parse_complex(const std::string& key, const std::string& v) {
    const auto parts = split(v, ',');
    if (parts.size() != 2)
        throw ConfigError("config: key '" + key + "' expects 're,im', got '" + v + "'");
    return {parse_double(key, parts[0]), parse_double(key, parts[1])};
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("config: malformed section at line " + std::to_string(lineno));
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
        const std::string key =
            (section.empty() ? "" : section + ".") + trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));

        if (key == "command") cfg.command = val;
        else if (key == "precision") {
            if (val == "std") cfg.precision = Precision::Standard;
            else if (val == "ext") cfg.precision = Precision::Extended;
            else throw ConfigError("config: precision must be 'std' or 'ext', got '" + val + "'");
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_long(key, val));
            cfg.params.seed = cfg.seed;
        } else if (key == "A_threshold") cfg.A_threshold = parse_double(key, val);
        else if (key == "family.name") {
            const auto f = family_from_name(val);
            if (!f) throw ConfigError("config: unknown family '" + val + "'");
            cfg.family = *f;
        } else if (key == "family.A") cfg.params.A = parse_double(key, val);
        else if (key == "family.band_constant") cfg.params.band_constant = parse_double(key, val);
        else if (key == "family.alpha_coeffs") cfg.params.alpha_coeffs = parse_double_list(key, val);
        else if (key == "family.custom_eps") cfg.params.custom_eps = parse_double_list(key, val);
        else if (key == "run.Ns") cfg.Ns = parse_long_list(key, val);
        else if (key == "run.n_values") cfg.n_values = parse_long_list(key, val);
        else if (key == "grid.center") {
            const auto c = parse_complex(key, val);
            cfg.grid.center_re = c.real();
            cfg.grid.center_im = c.imag();
        } else if (key == "grid.radius") cfg.grid.radius = parse_double(key, val);
        else if (key == "grid.points_per_side")
            cfg.grid.points_per_side = static_cast<int>(parse_long(key, val));
        else if (key == "planar.map") cfg.map = val;
        else if (key == "planar.z") cfg.z0 = parse_complex(key, val);
        else if (key == "planar.w") cfg.w0 = parse_complex(key, val);
        else if (key == "planar.multiplier") cfg.multiplier = static_cast<int>(parse_long(key, val));
        else if (key == "output.format") cfg.out_format = val;
        else if (key == "output.stem") cfg.out_stem = val;
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "command = " << c.command << '\n';
    os << "precision = " << precision_name(c.precision) << '\n';
    if (c.seed) os << "seed = " << *c.seed << '\n';
    if (c.A_threshold != 0.0) os << "A_threshold = " << fmt17(c.A_threshold) << '\n';
    os << "\n[family]\n";
    os << "name = " << family_name(c.family) << '\n';
    os << "A = " << fmt17(c.params.A) << '\n';
    os << "band_constant = " << fmt17(c.params.band_constant) << '\n';
    if (!c.params.alpha_coeffs.empty()) {
        os << "alpha_coeffs = ";
        for (std::size_t i = 0; i < c.params.alpha_coeffs.size(); ++i)
            os << (i ? "," : "") << fmt17(c.params.alpha_coeffs[i]);
        os << '\n';
    }
    if (!c.params.custom_eps.empty()) {
        os << "custom_eps = ";
        for (std::size_t i = 0; i < c.params.custom_eps.size(); ++i)
            os << (i ? "," : "") << fmt17(c.params.custom_eps[i]);
        os << '\n';
    }
    os << "\n[run]\n";
    if (!c.Ns.empty()) {
        os << "Ns = ";
        for (std::size_t i = 0; i < c.Ns.size(); ++i) os << (i ? "," : "") << c.Ns[i];
        os << '\n';
    }
    if (!c.n_values.empty()) {
        os << "n_values = ";
        for (std::size_t i = 0; i < c.n_values.size(); ++i) os << (i ? "," : "") << c.n_values[i];
        os << '\n';
    }
    os << "\n[grid]\n";
    os << "center = " << fmt17(c.grid.center_re) << "," << fmt17(c.grid.center_im) << '\n';
    os << "radius = " << fmt17(c.grid.radius) << '\n';
    os << "points_per_side = " << c.grid.points_per_side << '\n';
    os << "\n[planar]\n";
    os << "map = " << c.map << '\n';
    os << "z = " << fmt17(c.z0.real()) << "," << fmt17(c.z0.imag()) << '\n';
    os << "w = " << fmt17(c.w0.real()) << "," << fmt17(c.w0.imag()) << '\n';
    os << "multiplier = " << c.multiplier << '\n';
    os << "\n[output]\n";
    os << "format = " << c.out_format << '\n';
    if (!c.out_stem.empty()) os << "stem = " << c.out_stem << '\n';
    return os.str();
}

std::vector<std::string> validate(const ExperimentConfig& c) {
    std::vector<std::string> v;
    const bool is_compose = c.command == "compose";
    const bool is_check = c.command == "check";
    const bool is_rate = c.command == "rate";
    const bool is_counter = c.command == "counterexample";
    const bool is_identities = c.command == "identities";
    const bool is_planar = c.command == "planar";
    if (!(is_compose || is_check || is_rate || is_counter || is_identities || is_planar)) {
        v.push_back("command: must be one of compose|check|rate|counterexample|identities|planar");
        return v;
    }

    if (c.out_format != "csv" && c.out_format != "structured")
        v.push_back("output.format: must be csv or structured");

    if (c.grid.points_per_side < 2) v.push_back("grid.points_per_side: must be >= 2");
    if (!(c.grid.radius > 0)) v.push_back("grid.radius: must be positive");
    else {
        const double dx = c.grid.center_re - 1.0;
        const double dy = c.grid.center_im;
        if (dx * dx + dy * dy <= c.grid.radius * c.grid.radius)
            v.push_back("grid: grid touches fiber pole z = 1");
        else if (make_grid(c.grid).empty())
            v.push_back("grid: no points of the bounding-square grid fall inside the disk");
    }

    if (c.family == Family::Theorem7Band && !c.seed && !c.params.seed)
        v.push_back("seed: seed required for Theorem7Band");
    if (c.family == Family::AlphaForm && c.params.alpha_coeffs.empty())
        v.push_back("family.alpha_coeffs: required for AlphaForm");

    if (is_planar) {
        if (c.n_values.empty()) v.push_back("run.n_values: required for planar");
        if (c.map != "H" && c.map != "L") v.push_back("planar.map: must be H or L");
        if (c.multiplier != 1 && c.multiplier != 2) v.push_back("planar.multiplier: must be 1 or 2");
        if (c.map == "H" && c.multiplier != 1)
            v.push_back("planar.multiplier: H uses multiplier = 1");
        if (c.map == "L" && c.multiplier != 2)
            v.push_back("planar.multiplier: L uses multiplier = 2");
        return v;
    }

    if (c.Ns.empty()) {
        v.push_back("run.Ns: required for " + c.command);
        return v;
    }
    if ((is_compose || is_identities) && c.Ns.size() != 1)
        v.push_back("run.Ns: " + c.command + " expects a single N");
    if (is_counter && c.family != Family::Counterexample)
        v.push_back("family.name: counterexample command requires the Counterexample family");

    for (long N : c.Ns) {
        if (c.family == Family::Example1 && (N < 3 || N % 2 != 1))
            v.push_back("run.Ns: Example1 requires N = 2m+1 (got " + std::to_string(N) + ")");
        else if (c.family == Family::Example2 && (N < 6 || (N - 2) % 4 != 0))
            v.push_back("run.Ns: Example2 requires N = 4m+2 (got " + std::to_string(N) + ")");
        else if (N < 3)
            v.push_back("run.Ns: N too small (got " + std::to_string(N) + ")");
        if (c.family == Family::Custom &&
            static_cast<long>(c.params.custom_eps.size()) != N)
            v.push_back("family.custom_eps: length must equal N");
    }
    if (c.A_threshold < 0) v.push_back("A_threshold: must be >= 0 (0 selects the default)");
    return v;
}

}  // namespace parabifurc
