"""Addition formulae for sigma: golden data, verifiers and derivation."""
