"""Corpus discovery, analysis and aggregate statistics"""
