"""Test package for the routing toolkit."""
