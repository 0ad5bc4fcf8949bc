"""Shared configuration, settings and value types"""
