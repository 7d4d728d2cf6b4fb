#include "qrab/grid_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qrab/errors.hpp"

namespace qrab {

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{}) {
        throw ConfigError("grid csv: malformed number '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

void write_grid_csv(const PhaseGrid& grid, std::span<const double> values,
                    const std::filesystem::path& path) {
    if (values.size() != static_cast<std::size_t>(grid.nx) * grid.np) {
        throw ConfigError("write_grid_csv: value count does not match grid");
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("write_grid_csv: cannot open " + path.string());
    out << "# x: " << format_double(grid.x_min) << ' ' << format_double(grid.x_max)
        << ' ' << grid.nx << '\n';
    out << "# p: " << format_double(grid.p_min) << ' ' << format_double(grid.p_max)
        << ' ' << grid.np << '\n';
    for (int j = 0; j < grid.np; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            if (i) out << ',';
            out << format_double(values[static_cast<std::size_t>(j) * grid.nx + i]);
        }
        out << '\n';
    }
    if (!out) throw ConfigError("write_grid_csv: write failed for " + path.string());
}

namespace {

void parse_header(const std::string& line, char axis, double& lo, double& hi,
                  int& count) {
    std::istringstream in(line);
    std::string hash, name, a, b;
    in >> hash >> name >> a >> b >> count;
    if (!in || hash != "#" || name != std::string(1, axis) + ":") {
        throw ConfigError("grid csv: bad header line '" + line + "'");
    }
    lo = parse_double(a);
    hi = parse_double(b);
}

}  // namespace

GridData read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("read_grid_csv: cannot open " + path.string());
    GridData data;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("read_grid_csv: empty file");
    parse_header(line, 'x', data.grid.x_min, data.grid.x_max, data.grid.nx);
    if (!std::getline(in, line)) throw ConfigError("read_grid_csv: truncated file");
    parse_header(line, 'p', data.grid.p_min, data.grid.p_max, data.grid.np);
    data.values.reserve(static_cast<std::size_t>(data.grid.nx) * data.grid.np);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            const std::size_t end = (comma == std::string::npos) ? line.size() : comma;
            data.values.push_back(
                parse_double(std::string_view(line).substr(start, end - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (data.values.size() != static_cast<std::size_t>(data.grid.nx) * data.grid.np) {
        throw ConfigError("read_grid_csv: value count does not match header");
    }
    return data;
}

}  // namespace qrab
