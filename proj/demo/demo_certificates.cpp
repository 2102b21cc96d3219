// Walkthrough: singularity certificates over the integers and polynomial
// rings, and how local certificates glue into a global one.

#include <cstdio>

#include "krull/ring.hpp"

using namespace krull;

int main() {
  CompRing Z = CompRing::integers();

  // dim Z = 1: no single prime is singular, every pair is.
  std::printf("(7) singular over Z: %s\n",
              is_singular(Z, {Z.from_int(7)}) ? "yes" : "no");
  std::vector<RingElem> pair = {Z.from_int(6), Z.from_int(10)};
  std::printf("(6, 10) singular over Z: %s\n",
              is_singular(Z, pair) ? "yes" : "no");

  // The certificate is an explicit identity 6^m0 (10^m1 (1 + a1*10) + a0*6)
  // that expands to zero; anyone can re-check it by multiplying out.
  CertificateSearch found = find_singular_certificate(Z, pair);
  if (found.cert) {
    std::printf("certificate: m = (%u, %u), a = (%s, %s), verifies: %s\n",
                found.cert->m[0], found.cert->m[1],
                Z.str(found.cert->a[0]).c_str(),
                Z.str(found.cert->a[1]).c_str(),
                verify_singular_certificate(Z, pair, *found.cert) ? "yes"
                                                                  : "no");
  }

  // The same data can be found locally and merged: one certificate with
  // denominators only at 2, one with denominators only at 3.
  LocalizedCertificate at2{2, {0, 1}, {Rat(-10), Rat(1, 2)}};
  LocalizedCertificate at3{3, {0, 1}, {Rat(35, 9), Rat(-1, 3)}};
  GlueResult glued = glue_collapses({6, 10}, {at2, at3});
  std::printf("glued certificate: m = (%u, %u), a = (%s, %s)\n",
              glued.cert.m[0], glued.cert.m[1],
              Z.str(glued.cert.a[0]).c_str(), Z.str(glued.cert.a[1]).c_str());
  std::printf("cleared powers %s and %s combine by %s and %s\n",
              glued.leads[0].str().c_str(), glued.leads[1].str().c_str(),
              glued.partition[0].str().c_str(),
              glued.partition[1].str().c_str());

  // Polynomial rings: two univariate quadratics are always dependent, and
  // the dependence rewrites into a certificate.
  CompRing Q = CompRing::poly_rat({"x"});
  RingElem f = Q.add(Q.pow(Q.var(0), 2), Q.one());          // x^2 + 1
  RingElem g = Q.sub(Q.pow(Q.var(0), 2), Q.var(0));         // x^2 - x
  std::vector<RingElem> ys = {f, g};
  if (auto dep = find_algebraic_dependence(Q, ys, 2)) {
    SingularCertificate cert = collapse_from_dependence(Q, *dep, ys);
    std::printf("(x^2+1, x^2-x) dependence certificate verifies: %s\n",
                verify_singular_certificate(Q, ys, cert) ? "yes" : "no");
  }

  // An integral element x = 3 + 2t with t^2 = -1 satisfies
  // x^2 = 6x - 13, and each way of splitting the coefficients between the
  // two sides of a chain yields its own collapse identity.
  QuadRing Gi{-1, 0};
  QuadElem x{3, 2};
  IntegralRelation rel;
  rel.k = 2;
  rel.a = {QuadElem{-13, 0}, QuadElem{6, 0}, QuadElem{0, 0}};
  std::printf("x = 3 + 2t, x^2 = 6x - 13 holds: %s\n",
              verify_integral_relation(Gi, x, rel) ? "yes" : "no");
  for (const std::vector<size_t>& uside :
       {std::vector<size_t>{}, {0}, {1}, {0, 1}}) {
    IntegralSplitIdentity id = integral_relative_collapse(Gi, x, rel, uside);
    std::printf("  split {");
    for (size_t i = 0; i < uside.size(); ++i)
      std::printf("%s%zu", i ? ", " : "", uside[i]);
    std::printf("} verified: %s\n",
                verify_integral_split(Gi, x, rel, uside, id) ? "yes" : "no");
  }
  return 0;
}
