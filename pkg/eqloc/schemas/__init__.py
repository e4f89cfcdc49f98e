"""Pydantic schemas for JSON input and output."""
