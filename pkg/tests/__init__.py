"""Unit test package for logcouple."""
