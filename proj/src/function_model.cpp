#include "approx/function_model.hpp"

#include <cmath>

namespace approx {

FunctionModel FunctionModel::polynomial(std::vector<double> mono, Interval J) {
    int deg = static_cast<int>(mono.size()) - 1;
    return FunctionModel(
        "poly(deg=" + std::to_string(deg) + ")", J, 64,
        [mono = std::move(mono), deg](int nu, double x) {
            // differentiate the monomial coefficients nu times, then Horner
            double acc = 0.0;
            for (int k = deg; k >= nu; --k) {
                double fall = 1.0;
                for (int i = 0; i < nu; ++i) fall *= static_cast<double>(k - i);
                acc = acc * x + mono[static_cast<std::size_t>(k)] * fall;
            }
            return acc;
        });
}

FunctionModel FunctionModel::sine(double a, double b, Interval J) {
    return FunctionModel(
        "sin(" + std::to_string(a) + "x+" + std::to_string(b) + ")", J, 64,
        [a, b](int nu, double x) {
            double amp = std::pow(a, nu);
            switch (nu % 4) {
                case 0: return amp * std::sin(a * x + b);
                case 1: return amp * std::cos(a * x + b);
                case 2: return -amp * std::sin(a * x + b);
                default: return -amp * std::cos(a * x + b);
            }
        });
}

FunctionModel FunctionModel::exponential(Interval J) {
    return FunctionModel("exp", J, 64, [](int, double x) { return std::exp(x); });
}

FunctionModel FunctionModel::abs_pow(double gamma, Interval J) {
    int rmax = static_cast<int>(std::floor(gamma));
    if (gamma == std::floor(gamma)) rmax = static_cast<int>(gamma) - 1;
    if (rmax < 0) rmax = 0;
    return FunctionModel(
        "|x|^" + std::to_string(gamma), J, rmax,
        [gamma](int nu, double x) {
            if (x == 0.0) return 0.0;
            double fall = 1.0;
            for (int i = 0; i < nu; ++i) fall *= (gamma - i);
            double sgn = (x < 0.0 && nu % 2 == 1) ? -1.0 : 1.0;
            return sgn * fall * std::pow(std::abs(x), gamma - nu);
        });
}

FunctionModel FunctionModel::pos_pow(double gamma, double z, Interval J) {
    int rmax = static_cast<int>(std::floor(gamma));
    if (gamma == std::floor(gamma)) rmax = static_cast<int>(gamma) - 1;
    if (rmax < 0) rmax = 0;
    return FunctionModel(
        "(x-z)_+^" + std::to_string(gamma), J, rmax,
        [gamma, z](int nu, double x) {
            double t = x - z;
            if (t <= 0.0) return 0.0;
            double fall = 1.0;
            for (int i = 0; i < nu; ++i) fall *= (gamma - i);
            return fall * std::pow(t, gamma - nu);
        });
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_num(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("make_function: bad number: " + s);
    return v;
}

} // namespace

FunctionModel make_function(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& head = parts[0];
    auto argc = parts.size() - 1;
    try {
        if (head == "exp" && argc == 0) return FunctionModel::exponential();
        if (head == "sin" && (argc == 1 || argc == 2))
            return FunctionModel::sine(parse_num(parts[1]),
                                       argc == 2 ? parse_num(parts[2]) : 0.0);
        if (head == "abs_pow" && argc == 1) return FunctionModel::abs_pow(parse_num(parts[1]));
        if (head == "pos_pow" && (argc == 1 || argc == 2))
            return FunctionModel::pos_pow(parse_num(parts[1]),
                                          argc == 2 ? parse_num(parts[2]) : 0.0);
        if (head == "poly" && argc == 1) {
            std::vector<double> c;
            for (const auto& t : split(parts[1], ',')) c.push_back(parse_num(t));
            return FunctionModel::polynomial(std::move(c));
        }
    } catch (const std::exception& e) {
        throw std::invalid_argument("make_function: cannot parse `" + spec + "`: " + e.what());
    }
    throw std::invalid_argument("make_function: unknown spec `" + spec + "`");
}

} // namespace approx
