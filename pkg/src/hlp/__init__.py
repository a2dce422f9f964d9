"""Hall-Littlewood polynomials through the affine Hecke algebra."""
