"""Servicios del módulo."""
