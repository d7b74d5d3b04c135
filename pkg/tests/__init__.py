"""Tests for magnoise."""
