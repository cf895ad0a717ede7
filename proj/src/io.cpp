#include "qwalk/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

namespace qwalk::io {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Parses all of `s` as a double; returns false on any leftover characters.
bool parse_real(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return false;
    out = value;
    return true;
}

bool is_plain_real(std::string_view s) {
    double ignored = 0.0;
    return parse_real(trim(s), ignored);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

cplx parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    const auto fail = [&]() -> ParseError {
        return ParseError("cannot read '" + std::string(s) + "' as a complex number");
    };
    if (s.empty()) throw fail();

    double re = 0.0;
    if (parse_real(s, re)) return {re, 0.0};
    if (s.back() != 'i') throw fail();

    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not part of an exponent or the leading sign.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    const std::string_view real_part = split_at == std::string_view::npos ? std::string_view{} : body.substr(0, split_at);
    std::string_view imag_part = split_at == std::string_view::npos ? body : body.substr(split_at);

    double im = 0.0;
    if (imag_part.empty() || imag_part == "+") {
        im = 1.0;
    } else if (imag_part == "-") {
        im = -1.0;
    } else if (!parse_real(imag_part, im)) {
        throw fail();
    }
    if (!real_part.empty() && !parse_real(real_part, re)) throw fail();
    return {re, im};
}

std::vector<cplx> parse_complex_list(std::string_view text, std::size_t count) {
    const auto tokens = split(text, ',');
    std::vector<cplx> out;
    if (tokens.size() == count) {
        for (auto token : tokens) out.push_back(parse_complex(token));
        return out;
    }
    if (tokens.size() == 2 * count && std::all_of(tokens.begin(), tokens.end(), is_plain_real)) {
        for (std::size_t i = 0; i < count; ++i) {
            out.emplace_back(parse_complex(tokens[2 * i]).real(), parse_complex(tokens[2 * i + 1]).real());
        }
        return out;
    }
    std::ostringstream msg;
    msg << "expected " << count << " complex values (or " << 2 * count << " re,im reals) in '" << text << "', got "
        << tokens.size() << " fields";
    throw ParseError(msg.str());
}

Coin parse_coin(std::string_view text) {
    const std::string_view s = trim(text);
    if (s == "hadamard" || s == "H") return hadamard();
    const auto entries = parse_complex_list(s, 4);
    return make_coin(entries[0], entries[1], entries[2], entries[3]);
}

Coin parse_symmetric_coin(std::string_view text) {
    const auto angles = parse_double_list(text);
    if (angles.size() != 3) throw ParseError("--sym expects three angles eta,phi,psi");
    return make_symmetric_coin(angles[0], angles[1], angles[2]);
}

Qubit parse_qubit(std::string_view text) {
    const std::string_view s = trim(text);
    const double h = 1.0 / std::numbers::sqrt2;
    if (s == "symmetric") return Qubit(h, cplx(0.0, h));
    if (s == "left") return Qubit(1.0, 0.0);
    if (s == "right") return Qubit(0.0, 1.0);
    const auto entries = parse_complex_list(s, 2);
    return Qubit(entries[0], entries[1]);
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (auto token : split(text, ',')) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("cannot read '" + std::string(token) + "' as an integer");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    for (auto token : split(text, ',')) {
        double value = 0.0;
        if (!parse_real(token, value)) throw ParseError("cannot read '" + std::string(token) + "' as a number");
        out.push_back(value);
    }
    return out;
}

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string distribution_csv(const Distribution& dist) {
    std::string out = "k,p\n";
    const int n = dist.n();
    for (int k = -n; k <= n; k += 2) {
        out += std::to_string(k);
        out += ',';
        out += format_double(dist.at(k));
        out += '\n';
    }
    return out;
}

std::string distribution_json(const Distribution& dist, const Coin& coin, const Qubit& phi) {
    json rows = json::array();
    const int n = dist.n();
    for (int k = -n; k <= n; k += 2) rows.push_back({{"k", k}, {"p", dist.at(k)}});
    json doc = {
        {"n", n},
        {"coin", json::array({complex_json(coin.a()), complex_json(coin.b()), complex_json(coin.c()),
                              complex_json(coin.d())})},
        {"phi", json::array({complex_json(phi.alpha()), complex_json(phi.beta())})},
        {"distribution", std::move(rows)},
    };
    return doc.dump(2) + "\n";
}

Distribution parse_distribution_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        const int n = doc.at("n").get<int>();
        if (n < 0) throw ParseError("distribution JSON has negative n");
        std::vector<double> probs(static_cast<std::size_t>(2 * n + 1), 0.0);
        for (const auto& row : doc.at("distribution")) {
            const int k = row.at("k").get<int>();
            if (k < -n || k > n) throw ParseError("distribution JSON has k outside [-n, n]");
            probs[static_cast<std::size_t>(k + n)] = row.at("p").get<double>();
        }
        return Distribution(n, std::move(probs));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed distribution JSON: ") + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace qwalk::io
