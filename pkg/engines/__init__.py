"""Decision procedures, filters and the brute-force oracle."""
