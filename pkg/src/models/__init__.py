"""Data models and business logic"""
