"""
实验框架测试模块
"""
