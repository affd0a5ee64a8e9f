"""Finite-field ground truth: brute-force and Fourier point counts, GL_2 character table."""
