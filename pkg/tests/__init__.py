"""Tests for the toric sp_2n verification engine."""
