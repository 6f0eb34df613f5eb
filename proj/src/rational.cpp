#include "wildram/rational.hpp"

namespace wildram {

BigRational BigRational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return BigRational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return BigRational(num, den);
}

std::optional<long> BigRational::valuation(const Prime& p) const {
    if (is_zero()) return std::nullopt;
    mpz_class pp(static_cast<unsigned long>(p.value()));
    mpz_class tmp;
    // lowest terms: at most one of num, den carries a factor of p
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q_.get_num().get_mpz_t(), pp.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q_.get_den().get_mpz_t(), pp.get_mpz_t()));
    return vn - vd;
}

FieldElement BigRational::reduce_mod(const Prime& p) const {
    if (is_zero()) return FieldElement(0, p);
    auto v = valuation(p);
    if (v && *v < 0)
        throw std::domain_error("BigRational::reduce_mod: " + str() + " is not p-integral at p = " +
                                std::to_string(p.value()));
    mpz_class pp(static_cast<unsigned long>(p.value()));
    mpz_class rn, rd;
    mpz_mod(rn.get_mpz_t(), q_.get_num().get_mpz_t(), pp.get_mpz_t());
    mpz_mod(rd.get_mpz_t(), q_.get_den().get_mpz_t(), pp.get_mpz_t());
    FieldElement n(rn.get_si(), p);
    FieldElement d(rd.get_si(), p);
    return n * d.inv();
}

std::string BigRational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace wildram
