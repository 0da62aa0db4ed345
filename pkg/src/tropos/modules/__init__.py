"""Tropos modules package."""
