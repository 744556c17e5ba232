#pragma once

#include <string>

#include "fundalc/classifier.hpp"
#include "fundalc/newton.hpp"

namespace fundalc {

// Element literals:  elem := factor ('*' factor)*
//   factor := 't[' int (',' int)* ']' | 's' index | 'tau' index? | '1'
// 's0' is the affine simple reflection (irreducible data only); 'tau' the
// first length-zero generator. Parse errors carry the byte position.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

AffElt parse_element(const RootDatum& d, const std::string& literal);

// Canonical literal: translation part (always printed) followed by the
// reduced word of the finite part. parse(print(x)) == x.
std::string print_element(const RootDatum& d, const AffElt& x);

// Reduced word of a finite Weyl element over the simple reflections.
std::vector<int> finite_word(const RootDatum& d, const WeylElt& w);

std::string rat_str(const Rat& r);
std::string qvec_str(const QVec& v);

// JSON serializers (exact; rationals as "p/q" strings).
std::string element_json(const RootDatum& d, const AffElt& x);
std::string newton_json(const RootDatum& d, const NewtonDatum& nd);
std::string vdatum_json(const RootDatum& d, const VDatum& vd);
std::string certificate_json(const RootDatum& d, const ReductionCertificate& cert);

}  // namespace fundalc
