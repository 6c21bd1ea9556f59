"""
格式化器测试模块
"""
