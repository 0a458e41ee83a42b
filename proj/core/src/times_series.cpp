#include "kptau/times_series.hpp"

#include "kptau/partition.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kptau {

int monomial_weight(const Monomial& m)
{
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        w += static_cast<int>(i + 1) * m[i];
    }
    return w;
}

void trim_monomial(Monomial& m)
{
    while (!m.empty() && m.back() == 0) {
        m.pop_back();
    }
}

std::string monomial_to_string(const Monomial& m)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!first) {
            os << ' ';
        }
        os << 't' << (i + 1);
        if (m[i] > 1) {
            os << '^' << m[i];
        }
        first = false;
    }
    if (first) {
        os << '1';
    }
    return os.str();
}

bool monomial_weight_lex_less(const Monomial& a, const Monomial& b)
{
    const int wa = monomial_weight(a);
    const int wb = monomial_weight(b);
    if (wa != wb) {
        return wa < wb;
    }
    return a < b;
}

Monomial monomial_from_parts(const std::vector<int>& parts)
{
    Monomial m;
    for (int p : parts) {
        if (static_cast<int>(m.size()) < p) {
            m.resize(static_cast<std::size_t>(p), 0);
        }
        ++m[static_cast<std::size_t>(p - 1)];
    }
    return m;
}

TimesSeries::TimesSeries(int num_vars, int max_weight)
    : num_vars_(num_vars), max_weight_(max_weight)
{
    if (num_vars < 0) {
        throw std::invalid_argument("TimesSeries: negative num_vars");
    }
}

TimesSeries TimesSeries::constant(const Rational& c, int num_vars, int max_weight)
{
    TimesSeries s(num_vars, max_weight);
    s.set_coeff({}, c);
    return s;
}

Rational TimesSeries::coeff(const Monomial& m) const
{
    Monomial key = m;
    trim_monomial(key);
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TimesSeries::set_coeff(Monomial m, Rational c)
{
    trim_monomial(m);
    if (monomial_weight(m) > max_weight_) {
        return;
    }
    for (int e : m) {
        if (e < 0) {
            throw std::invalid_argument("TimesSeries: negative exponent");
        }
    }
    if (static_cast<int>(m.size()) > num_vars_) {
        num_vars_ = static_cast<int>(m.size());
    }
    if (c == 0) {
        terms_.erase(m);
    } else {
        terms_[std::move(m)] = std::move(c);
    }
}

void TimesSeries::add_to_coeff(Monomial m, const Rational& c)
{
    trim_monomial(m);
    if (c == 0 || monomial_weight(m) > max_weight_) {
        return;
    }
    if (static_cast<int>(m.size()) > num_vars_) {
        num_vars_ = static_cast<int>(m.size());
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TimesSeries TimesSeries::truncated(int new_max_weight) const
{
    TimesSeries out(num_vars_, std::min(new_max_weight, max_weight_));
    for (const auto& [m, c] : terms_) {
        if (monomial_weight(m) <= out.max_weight_) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

TimesSeries TimesSeries::weight_component(int w) const
{
    TimesSeries out(num_vars_, max_weight_);
    for (const auto& [m, c] : terms_) {
        if (monomial_weight(m) == w) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

const std::pair<const Monomial, Rational>* TimesSeries::leading_term() const
{
    const std::pair<const Monomial, Rational>* best = nullptr;
    for (const auto& term : terms_) {
        if (best == nullptr || monomial_weight_lex_less(term.first, best->first)) {
            best = &term;
        }
    }
    return best;
}

TimesSeries& TimesSeries::operator+=(const TimesSeries& other)
{
    max_weight_ = std::min(max_weight_, other.max_weight_);
    num_vars_ = std::max(num_vars_, other.num_vars_);
    std::erase_if(terms_, [&](const auto& t) {
        return monomial_weight(t.first) > max_weight_;
    });
    for (const auto& [m, c] : other.terms_) {
        add_to_coeff(m, c);
    }
    return *this;
}

TimesSeries& TimesSeries::operator-=(const TimesSeries& other)
{
    max_weight_ = std::min(max_weight_, other.max_weight_);
    num_vars_ = std::max(num_vars_, other.num_vars_);
    std::erase_if(terms_, [&](const auto& t) {
        return monomial_weight(t.first) > max_weight_;
    });
    for (const auto& [m, c] : other.terms_) {
        add_to_coeff(m, -c);
    }
    return *this;
}

TimesSeries& TimesSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

TimesSeries operator+(TimesSeries a, const TimesSeries& b)
{
    a += b;
    return a;
}

TimesSeries operator-(TimesSeries a, const TimesSeries& b)
{
    a -= b;
    return a;
}

TimesSeries operator*(const TimesSeries& a, const TimesSeries& b)
{
    TimesSeries out(std::max(a.num_vars(), b.num_vars()),
                    std::min(a.max_weight(), b.max_weight()));
    for (const auto& [ma, ca] : a.terms()) {
        const int wa = monomial_weight(ma);
        if (wa > out.max_weight()) {
            continue;
        }
        for (const auto& [mb, cb] : b.terms()) {
            if (wa + monomial_weight(mb) > out.max_weight()) {
                continue;
            }
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) {
                m[i] += ma[i];
            }
            for (std::size_t i = 0; i < mb.size(); ++i) {
                m[i] += mb[i];
            }
            out.add_to_coeff(std::move(m), ca * cb);
        }
    }
    return out;
}

TimesSeries operator*(const Rational& c, TimesSeries a)
{
    a *= c;
    return a;
}

TimesSeries operator-(TimesSeries a)
{
    a *= Rational(-1);
    return a;
}

TimesSeries exp_series(const TimesSeries& f)
{
    if (f.constant_term() != 0) {
        throw std::invalid_argument("exp_series: nonzero constant term");
    }
    TimesSeries acc = TimesSeries::constant(1, f.num_vars(), f.max_weight());
    TimesSeries term = acc;
    for (int n = 1; n <= f.max_weight(); ++n) {
        term = Rational(1, n) * (term * f);
        if (term.is_zero()) {
            break;
        }
        acc += term;
    }
    return acc;
}

TimesSeries log_series(const TimesSeries& g)
{
    if (g.constant_term() != 1) {
        throw std::invalid_argument("log_series: constant term is not 1");
    }
    TimesSeries x = g - TimesSeries::constant(1, g.num_vars(), g.max_weight());
    TimesSeries acc(g.num_vars(), g.max_weight());
    TimesSeries power = TimesSeries::constant(1, g.num_vars(), g.max_weight());
    for (int n = 1; n <= g.max_weight(); ++n) {
        power = power * x;
        if (power.is_zero()) {
            break;
        }
        acc += Rational((n % 2 == 1) ? 1 : -1, n) * power;
    }
    return acc;
}

TimesSeries diff(const TimesSeries& f, int k)
{
    if (k < 1) {
        throw std::invalid_argument("diff: time index must be >= 1");
    }
    TimesSeries out(f.num_vars(), f.max_weight() - k);
    const std::size_t idx = static_cast<std::size_t>(k - 1);
    for (const auto& [m, c] : f.terms()) {
        if (m.size() <= idx || m[idx] == 0) {
            continue;
        }
        Monomial d = m;
        const int e = d[idx];
        d[idx] -= 1;
        out.add_to_coeff(std::move(d), Rational(e) * c);
    }
    return out;
}

TimesSeries multiply_by_time(const TimesSeries& f, int k)
{
    if (k < 1) {
        throw std::invalid_argument("multiply_by_time: time index must be >= 1");
    }
    TimesSeries out(std::max(f.num_vars(), k), f.max_weight());
    const std::size_t idx = static_cast<std::size_t>(k - 1);
    for (const auto& [m, c] : f.terms()) {
        Monomial d = m;
        if (d.size() <= idx) {
            d.resize(idx + 1, 0);
        }
        d[idx] += 1;
        out.add_to_coeff(std::move(d), c);
    }
    return out;
}

TimesSeries monomial_series(Monomial m, const Rational& c, int num_vars, int max_weight)
{
    TimesSeries s(num_vars, max_weight);
    s.set_coeff(std::move(m), c);
    return s;
}

TimesSeries scale_vars(const TimesSeries& f, const Rational& c)
{
    TimesSeries out(f.num_vars(), f.max_weight());
    for (const auto& [m, v] : f.terms()) {
        int total = 0;
        for (int e : m) {
            total += e;
        }
        Rational factor = 1;
        for (int i = 0; i < total; ++i) {
            factor *= c;
        }
        out.set_coeff(m, v * factor);
    }
    return out;
}

TimesSeries shift_var_indices(const TimesSeries& f, int offset, int new_num_vars,
                              int new_max_weight)
{
    TimesSeries out(new_num_vars, new_max_weight);
    for (const auto& [m, v] : f.terms()) {
        Monomial d(m.size() + static_cast<std::size_t>(offset), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            d[i + static_cast<std::size_t>(offset)] = m[i];
        }
        out.add_to_coeff(std::move(d), v);
    }
    return out;
}

TimesSeries random_series(int num_vars, int max_weight, unsigned seed,
                          bool odd_times_only)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    TimesSeries out(num_vars, max_weight);
    for (const auto& part : partitions_up_to(max_weight)) {
        bool usable = true;
        for (int p : part.parts) {
            if (p > num_vars || (odd_times_only && p % 2 == 0)) {
                usable = false;
                break;
            }
        }
        if (!usable) {
            continue;
        }
        out.set_coeff(monomial_from_parts(part.parts), Rational(num(rng), den(rng)));
    }
    return out;
}

}  // namespace kptau
