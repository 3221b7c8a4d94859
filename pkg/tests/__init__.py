"""Test suite for pfhat."""
