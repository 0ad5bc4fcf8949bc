"""Rewrite suggestions and patch rendering"""
