"""Core arithmetic, tables and services for the Hilbert function classifier."""
