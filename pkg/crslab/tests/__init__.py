"""Test suite for crslab"""
