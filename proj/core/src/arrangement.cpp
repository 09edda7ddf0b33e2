#include "oig/arrangement.hpp"

#include <algorithm>

#include "oig/fourier_motzkin.hpp"

namespace oig {

rational_arrangement::rational_arrangement(int d, std::vector<qvec> forms)
    : d_(d), forms_(std::move(forms)) {
    if (d < 0) throw error("rational_arrangement: negative dimension");
    for (const qvec& f : forms_) {
        if (static_cast<int>(f.size()) != d) throw error("rational_arrangement: form arity mismatch");
        bool zero = true;
        for (const rational& x : f)
            if (x != 0) zero = false;
        if (zero) throw error("rational_arrangement: a form is identically zero");
    }
    for (std::size_t i = 0; i < forms_.size(); ++i)
        for (std::size_t j = i + 1; j < forms_.size(); ++j) {
            // proportional iff all 2x2 minors vanish
            bool prop = true;
            for (int a = 0; a < d && prop; ++a)
                for (int b = a + 1; b < d && prop; ++b)
                    if (forms_[i][static_cast<std::size_t>(a)] * forms_[j][static_cast<std::size_t>(b)] !=
                        forms_[i][static_cast<std::size_t>(b)] * forms_[j][static_cast<std::size_t>(a)])
                        prop = false;
            if (prop)
                throw error("rational_arrangement: forms " + std::to_string(i) + " and " +
                            std::to_string(j) + " are proportional");
        }
}

bool rational_arrangement::essential() const {
    qmat m = forms_;
    return rank_of(m) == d_;
}

bool sign_feasible(const rational_arrangement& arr, const std::string& sigma) {
    if (static_cast<int>(sigma.size()) != arr.size())
        throw error("sign_feasible: sigma length mismatch");
    std::vector<lin_constraint> cs;
    for (int e = 0; e < arr.size(); ++e) {
        lin_constraint c;
        c.coeffs = arr.form(e);
        switch (sigma[static_cast<std::size_t>(e)]) {
            case '0': c.r = rel::eq; break;
            case '+': c.r = rel::gt; break;
            case '-':
                c.r = rel::gt;
                for (rational& x : c.coeffs) x = -x;
                break;
            default: throw error("sign_feasible: sigma characters must be 0, + or -");
        }
        cs.push_back(std::move(c));
    }
    return fm_feasible(arr.dimension(), std::move(cs));
}

std::vector<std::string> real_covectors(const rational_arrangement& arr) {
    int n = arr.size();
    if (n > 10) throw cap_error("real_covectors: more than 10 forms");
    std::vector<std::string> out;
    std::string sigma(static_cast<std::size_t>(n), '0');
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int e = 0; e < n; ++e) {
            sigma[static_cast<std::size_t>(e)] = "0+-"[c % 3];
            c /= 3;
        }
        if (sign_feasible(arr, sigma)) out.push_back(sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

oriented_system om_from_vectors(const std::vector<qvec>& vectors,
                                std::vector<std::string> labels) {
    if (vectors.empty()) throw error("om_from_vectors: no vectors");
    int d = static_cast<int>(vectors.front().size());
    for (const qvec& v : vectors) {
        bool zero = true;
        for (const rational& x : v)
            if (x != 0) zero = false;
        if (zero) throw error("om_from_vectors: zero vector (a loop) rejected");
    }
    // covectors: signs of f(v_e) over linear functionals f, i.e. the real
    // covectors of the arrangement whose forms are the vectors themselves
    rational_arrangement dual(d, vectors);
    std::vector<std::string> covs = real_covectors(dual);

    // underlying matroid: linearly independent subsets, by exact rank
    int n = static_cast<int>(vectors.size());
    if (labels.empty())
        for (int e = 0; e < n; ++e) labels.push_back("v" + std::to_string(e));
    if (static_cast<int>(labels.size()) != n) throw error("om_from_vectors: label count mismatch");
    std::vector<mask_t> members;
    for (mask_t s = 0; s < (mask_t{1} << n); ++s) {
        qmat m;
        for (int e : elements_of(s)) m.push_back(vectors[static_cast<std::size_t>(e)]);
        if (rank_of(m) == popcount(s)) members.push_back(s);
    }
    set_system sys(ground_set(std::move(labels)), std::move(members));
    oriented_system o = oriented_system::validate(sys, covs);
    if (!o.passed())
        throw internal_error("om_from_vectors: realizable covectors failed validation");
    return o;
}

}  // namespace oig
